#include <iostream>
#include <memory>

#include "cli.hpp"
#include "simplexft/classical_poly.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/fourier.hpp"
#include "simplexft/hypergeom.hpp"
#include "simplexft/sfamily.hpp"
#include "simplexft/simplex_poly.hpp"

namespace simplexft::cli {
namespace {

struct EvalArgs {
  int precision = 17;
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double x = 0.0;
  double x_im = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  std::vector<double> num;
  std::vector<double> den;
  double z = 1.0;
  double z_im = 0.0;
  int r = 0;
  std::vector<int> index;
  std::vector<double> va;
  std::vector<double> vb;
  std::vector<double> valpha;
  std::vector<double> vx;
  std::vector<double> vx_im;
  std::vector<double> xi;
  std::string form = "3f2";
  bool numeric = false;
};

void check_rank(int r, const std::vector<int>& n) {
  if (r != 0 && static_cast<std::size_t>(r) != n.size()) {
    throw DimensionMismatchError("--r " + std::to_string(r) + " does not match --n with " +
                                 std::to_string(n.size()) + " entries");
  }
}

void print(std::complex<double> v, int precision) { std::cout << format_complex(v, precision) << "\n"; }

CLI::App* sub(CLI::App& eval, const char* name, const char* about, EvalArgs& args) {
  CLI::App* s = eval.add_subcommand(name, about);
  s->add_option("--precision", args.precision, "Significant digits")->capture_default_str();
  return s;
}

} // namespace

void register_eval(CLI::App& app, int& /*exit_code*/) {
  auto args = std::make_shared<EvalArgs>();
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one function value");
  eval->require_subcommand(1);

  CLI::App* jacobi = sub(*eval, "jacobi", "Jacobi polynomial P_n^(alpha,beta)(x)", *args);
  jacobi->add_option("--n", args->n)->required()->check(CLI::NonNegativeNumber);
  jacobi->add_option("--alpha", args->alpha)->required();
  jacobi->add_option("--beta", args->beta)->required();
  jacobi->add_option("--x", args->x)->required();
  jacobi->callback([args] {
    print(jacobi_eval(JacobiParams{static_cast<unsigned>(args->n), args->alpha, args->beta}, args->x),
          args->precision);
  });

  CLI::App* hahn = sub(*eval, "hahn", "Continuous Hahn polynomial p_n(x; a, b, c, d)", *args);
  hahn->add_option("--n", args->n)->required()->check(CLI::NonNegativeNumber);
  hahn->add_option("--a", args->a)->required();
  hahn->add_option("--b", args->b)->required();
  hahn->add_option("--c", args->c)->required();
  hahn->add_option("--d", args->d)->required();
  hahn->add_option("--x", args->x)->required();
  hahn->add_option("--x-im", args->x_im, "Imaginary part of x");
  hahn->callback([args] {
    const HahnParams p{static_cast<unsigned>(args->n), args->a, args->b, args->c, args->d};
    print(hahn_eval(p, Complex(args->x, args->x_im)), args->precision);
  });

  CLI::App* hyper = sub(*eval, "hyper", "Terminating pFq(num; den; z)", *args);
  hyper->add_option("--num", args->num, "Numerator parameters")->required()->delimiter(',');
  hyper->add_option("--den", args->den, "Denominator parameters")->delimiter(',');
  hyper->add_option("--z", args->z)->capture_default_str();
  hyper->add_option("--z-im", args->z_im);
  hyper->callback([args] {
    HyperParams p;
    for (const double v : args->num) {
      p.numerator.emplace_back(v);
    }
    for (const double v : args->den) {
      p.denominator.emplace_back(v);
    }
    p.argument = Complex(args->z, args->z_im);
    print(eval_terminating(p), args->precision);
  });

  CLI::App* simplex = sub(*eval, "simplex", "Simplex basis element P_n^(alpha)(x)", *args);
  simplex->add_option("--r", args->r, "Dimension (optional, checked against --n)");
  simplex->add_option("--n", args->index)->required()->delimiter(',');
  simplex->add_option("--alpha", args->valpha)->required()->delimiter(',');
  simplex->add_option("--x", args->vx)->required()->delimiter(',');
  simplex->callback([args] {
    check_rank(args->r, args->index);
    print(simplex_poly_eval(to_multi_index(args->index), AlphaVector(args->valpha), args->vx), args->precision);
  });

  CLI::App* g = sub(*eval, "g", "g_r(x), or its Fourier transform with --xi", *args);
  g->add_option("--r", args->r, "Dimension (optional, checked against --n)");
  g->add_option("--n", args->index)->required()->delimiter(',');
  g->add_option("--a", args->va)->required()->delimiter(',');
  g->add_option("--alpha", args->valpha)->required()->delimiter(',');
  auto* gx = g->add_option("--x", args->vx, "Point for g_r")->delimiter(',');
  auto* gxi = g->add_option("--xi", args->xi, "Frequency for the transform")->delimiter(',');
  gx->excludes(gxi);
  g->add_option("--form", args->form, "Lambda form for the transform: 3f2 or hahn")
      ->check(CLI::IsMember({"3f2", "hahn"}))
      ->capture_default_str();
  g->add_flag("--numeric", args->numeric, "Transform by quadrature instead of the closed form");
  g->callback([args] {
    check_rank(args->r, args->index);
    const GParams p{to_multi_index(args->index), ParamVector(args->va), AlphaVector(args->valpha)};
    if (!args->xi.empty()) {
      const Complex v = args->numeric ? ft_numeric(p, args->xi)
                                      : ft_closed_form(p, args->xi,
                                                       args->form == "hahn" ? LambdaForm::hahn
                                                                            : LambdaForm::hypergeometric);
      print(v, args->precision);
      return;
    }
    if (args->vx.empty()) {
      throw ParameterRangeError("eval g: one of --x or --xi is required");
    }
    print(g_eval(p, args->vx), args->precision);
  });

  CLI::App* sfun = sub(*eval, "sfun", "_rS_n(x; a, b) at complex x", *args);
  sfun->add_option("--r", args->r, "Dimension (optional, checked against --n)");
  sfun->add_option("--n", args->index)->required()->delimiter(',');
  sfun->add_option("--a", args->va)->required()->delimiter(',');
  sfun->add_option("--b", args->vb)->required()->delimiter(',');
  sfun->add_option("--x", args->vx, "Real parts")->required()->delimiter(',');
  sfun->add_option("--x-im", args->vx_im, "Imaginary parts")->delimiter(',');
  sfun->add_option("--form", args->form, "3f2 or hahn")->check(CLI::IsMember({"3f2", "hahn"}))->capture_default_str();
  sfun->callback([args] {
    check_rank(args->r, args->index);
    std::vector<Complex> x;
    for (std::size_t k = 0; k < args->vx.size(); ++k) {
      x.emplace_back(args->vx[k], k < args->vx_im.size() ? args->vx_im[k] : 0.0);
    }
    const SParams p{to_multi_index(args->index), ParamVector(args->va), ParamVector(args->vb)};
    print(s_eval(p, x, args->form == "hahn" ? SForm::hahn : SForm::hypergeometric), args->precision);
  });

  CLI::App* wfun = sub(*eval, "wfun", "Weight W_r(x; a, b) at real x", *args);
  wfun->add_option("--a", args->va)->required()->delimiter(',');
  wfun->add_option("--b", args->vb)->required()->delimiter(',');
  wfun->add_option("--x", args->vx)->required()->delimiter(',');
  wfun->callback([args] {
    const SParams p{MultiIndex(std::vector<unsigned>(args->vx.size(), 0u)), ParamVector(args->va),
                    ParamVector(args->vb)};
    print(w_weight(p, args->vx), args->precision);
  });
}

} // namespace simplexft::cli
