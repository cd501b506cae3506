#include "isum/numerics.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <string>

#include "isum/errors.hpp"

namespace isum {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// G_n from x/ln(1+x) = sum G_n x^n:  sum_{k=0}^n G_k (-1)^{n-k}/(n-k+1) = [n=0].
// B_m from sum_{j=0}^m C(m+1,j) B_j = 0 for m >= 1.
class CoefficientCache {
 public:
  double gregory(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return g_[n];
  }
  double gregory_tail(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return gbar_[n];
  }
  double bernoulli(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return b_[n];
  }

 private:
  void grow(int n) {
    if (n < static_cast<int>(g_.size())) return;
    int target = n + 32;
    for (int m = static_cast<int>(gq_.size()); m <= target; ++m) {
      Rational gm = (m == 0) ? Rational(1) : Rational(0);
      for (int k = 0; k < m; ++k) {
        Rational term = gq_[k] / Rational(m - k + 1);
        if ((m - k) % 2) gm += term; else gm -= term;
      }
      gq_.push_back(gm);
      Rational tail = (m == 0) ? Rational(1) : tailq_.back() - abs(gm);
      tailq_.push_back(tail);
      g_.push_back(gm.convert_to<double>());
      gbar_.push_back(tail.convert_to<double>());

      Rational bm(1);
      if (m > 0) {
        bm = 0;
        Rational binom(1);  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
          bm += binom * bq_[j];
          binom = binom * Rational(m + 1 - j) / Rational(j + 1);
        }
        bm = -bm / Rational(m + 1);
      }
      bq_.push_back(bm);
      b_.push_back(bm.convert_to<double>());
    }
  }

  std::mutex mu_;
  std::vector<Rational> gq_, tailq_, bq_;
  std::vector<double> g_, gbar_, b_;
};

CoefficientCache& cache() {
  static CoefficientCache c;
  return c;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative index");
}

}  // namespace

double gregory_coeff(int n) {
  require_nonnegative(n, "gregory_coeff");
  return cache().gregory(n);
}

double gregory_tail(int n) {
  require_nonnegative(n, "gregory_tail");
  return cache().gregory_tail(n);
}

double bernoulli_number(int n) {
  require_nonnegative(n, "bernoulli_number");
  return cache().bernoulli(n);
}

double bernoulli_poly(int n, double x) {
  require_nonnegative(n, "bernoulli_poly");
  // Horner in x with coefficients C(n,k) B_{n-k}.
  double acc = 0;
  double binom = 1;  // C(n, k) for k = n down to 0
  for (int k = n; k >= 0; --k) {
    acc = acc * x + binom * bernoulli_number(n - k);
    binom = binom * k / (n - k + 1);
  }
  return acc;
}

double gen_binomial(double x, int j) {
  require_nonnegative(j, "gen_binomial");
  double r = 1;
  for (int i = 0; i < j; ++i) r *= (x - i) / (i + 1);
  return r;
}

Difference forward_difference_ex(const RealFn& f, int j, double x, double h) {
  require_nonnegative(j, "forward_difference");
  CompensatedSum s;
  double mag = 0;
  double binom = 1;
  for (int k = 0; k <= j; ++k) {
    double v = f(x + k * h);
    if (!std::isfinite(v))
      throw DomainError("forward_difference: non-finite value at " + std::to_string(x + k * h));
    double t = binom * v;
    s.add(((j - k) % 2) ? -t : t);
    mag += std::abs(t);
    binom = binom * (j - k) / (k + 1);
  }
  Difference d;
  d.value = s.value();
  d.rounding = 2 * std::numeric_limits<double>::epsilon() * mag;
  d.cancellation_warning = j > 25;
  return d;
}

double forward_difference(const RealFn& f, int j, double x, double h) {
  return forward_difference_ex(f, j, x, h).value;
}

std::vector<double> difference_table(const std::vector<double>& values) {
  std::vector<double> work(values);
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t len = work.size(); len > 0; --len) {
    out.push_back(work[0]);
    for (std::size_t i = 0; i + 1 < len; ++i) work[i] = work[i + 1] - work[i];
  }
  return out;
}

NodeSet NodeSet::sample(const RealFn& f, std::vector<double> nodes) {
  NodeSet s;
  s.values.reserve(nodes.size());
  for (double t : nodes) s.values.push_back(f(t));
  s.nodes = std::move(nodes);
  return s;
}

std::vector<double> newton_coefficients(const NodeSet& f) {
  const auto& x = f.nodes;
  if (x.empty() || x.size() != f.values.size())
    throw DomainError("divided difference: node/value size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = i + 1; k < x.size(); ++k)
      if (x[i] == x[k]) throw DomainError("divided difference: repeated node");
  std::vector<double> c(f.values);
  for (std::size_t level = 1; level < x.size(); ++level)
    for (std::size_t i = x.size() - 1; i >= level; --i)
      c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - level]);
  return c;
}

double divided_difference(const NodeSet& f) { return newton_coefficients(f).back(); }

double newton_interpolate(const NodeSet& f, double x) {
  auto c = newton_coefficients(f);
  double acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * (x - f.nodes[i]) + c[i];
  return acc;
}

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = fc * kWgk[7], resg = fc * kWg[3], resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    resk += kWgk[j] * (fv1[j] + fv2[j]);
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (fv1[j] + fv2[j]);
  }
  double mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  resk *= h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg * h));
  if (resasc != 0 && err != 0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(50 * eps * resabs, err);
  if (!std::isfinite(resk)) err = std::numeric_limits<double>::infinity();
  return {a, b, resk, err};
}

}  // namespace

IntegralResult integrate_ex(const RealFn& f, double a, double b, double tol, int max_intervals) {
  IntegralResult out;
  if (a == b) return out;
  if (!(tol > 0)) throw DomainError("integrate: tol must be positive");
  std::priority_queue<Panel> heap;
  Panel first = gk15(f, a, b);
  double total = first.value, err = first.error;
  heap.push(first);
  out.evaluations = 15;
  const double eps = std::numeric_limits<double>::epsilon();
  while (err > tol && static_cast<int>(heap.size()) < max_intervals) {
    Panel worst = heap.top();
    double mid = 0.5 * (worst.a + worst.b);
    if (std::abs(worst.b - worst.a) < 64 * eps * std::max(1.0, std::abs(mid))) break;
    heap.pop();
    Panel left = gk15(f, worst.a, mid), right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift accumulated by incremental updates.
  CompensatedSum tv, te;
  out.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    tv.add(heap.top().value);
    te.add(heap.top().error);
    heap.pop();
  }
  out.value = tv.value();
  out.error = te.value();
  if (!std::isfinite(out.value) || out.error > tol)
    throw IntegrationError("integrate: tolerance not reached on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]",
                           out.value, out.error);
  return out;
}

double integrate(const RealFn& f, double a, double b, double tol) { return integrate_ex(f, a, b, tol).value; }

}  // namespace isum
