#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/qoperator.hpp"
#include "qalg/roots.hpp"
#include "qalg/series.hpp"
#include "qalg/unipoly.hpp"

namespace qalg {

struct Height {
  Rational H;
  Rational h;
  bool achieved = true;
};

// Over the shifting factors: H = max alpha_ell / a, h = least a attaining it.
Height height_coheight(const QOperator& p);

struct CrestReport {
  Rational H;
  Rational h;
  QOperator crest;
  std::vector<std::pair<QFactor, int>> scope;
  UniPoly crest_poly;                 // in z
  std::optional<RootSet> roots;       // when q is known
  std::optional<SmallestRoot> smallest;
  std::optional<double> R;            // modulus of the smallest root
};

// Needs max alpha of the nonshifting part equal to 0.
CrestReport crest(const QOperator& p, const Coeff& f0, std::optional<cdouble> q = std::nullopt);

bool crest_is_linear(const QOperator& p);

struct BorelTransform {
  std::vector<cdouble> g;
  std::optional<double> radius;
};

// g_n = q^(-H n (n - h) / 2) f_n with an empirical radius of convergence.
BorelTransform crest_borel(const SeriesCoeffs& f, const Rational& H, const Rational& h);

struct EdgeReport {
  Rational E;
  QOperator edge;
  UniPoly edge_poly;
  // Largest s with |[z^a] P| growing like |q|^(s a^2 / 2); zero for bounded coefficients.
  double coefficient_gevrey_order = 0.0;
};

EdgeReport edge_elevation(const QOperator& p, std::optional<cdouble> q = std::nullopt);

struct DepthReport {
  Depth D;
  std::optional<double> d;  // co-depth among the depth minimizers
};

DepthReport depth_codepth(const QOperator& p);

enum class Regime { Analytic, Entire, Divergent, Balanced, Other };
std::string regime_name(Regime r);

struct RegimeReport {
  Regime regime = Regime::Other;
  int shift = 0;  // right sigma-conjugation applied before classifying
  QOperator normalized;
  std::optional<Height> height;
  std::optional<DepthReport> depth;
  std::string growth;
};

RegimeReport classify_regime(const QOperator& p, cdouble q);

struct LinearizeResult {
  QOperator op;
  std::vector<Coeff> prefix;
  int steps = 0;
  std::vector<Rational> heights;  // height before each step, then the final one
};

class MaxStepsError : public Error {
 public:
  MaxStepsError(const std::string& msg, std::vector<Rational> heights)
      : Error(ErrorKind::MaxStepsExceeded, msg), heights_(std::move(heights)) {}
  const std::vector<Rational>& heights() const { return heights_; }

 private:
  std::vector<Rational> heights_;
};

// Translate by f_0 and simplify by z until the crest is linear.
LinearizeResult linearize_crest(const QOperator& p, int max_steps);

struct ResidueClass {
  int residue = 0;
  cdouble estimate = 0.0;
  double spread = 0.0;            // max Cauchy difference over the tail window
  double last_difference = 0.0;   // between the last two samples
};

struct DivergentReport {
  Rational H;
  Rational h;
  double R = 0.0;
  int period = 1;
  bool generic = true;  // unique simple smallest root and a single crest factor
  std::vector<ResidueClass> classes;
  std::vector<cdouble> normalized;
};

DivergentReport divergent_estimate(const QOperator& p, const SeriesCoeffs& f);

}  // namespace qalg
