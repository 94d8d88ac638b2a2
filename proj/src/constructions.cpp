#include "polyface/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyface/galois.hpp"

namespace polyface {

namespace {

constexpr double kEntropyBisectTol = 1e-12;
constexpr int kBisectMaxIter = 200;

double two_level_entropy(int v, double p) {
  if (p >= 1.0) return 0.0;
  double rest = (1.0 - p) / (v - 1);
  return -p * std::log(p) - (1.0 - p) * std::log(rest);
}

// Codeword supports realizing ln(v) * rank(U_{k,m}); lexicographically sorted.
std::vector<Outcome> uniform_support(int k, int m, int v) {
  if (m < 1 || m > kMaxGroundSet) throw std::invalid_argument("coordinate count must be in 1..16");
  if (v < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (k < 1 || k > m) throw std::invalid_argument("uniform rank needs 1 <= k <= n");
  std::vector<Outcome> support;
  if (k == 1) {
    for (int t = 0; t < v; ++t) support.push_back(Outcome(m, t));
    return support;
  }
  auto enumerate_messages = [&](auto&& emit) {
    Outcome msg(k, 0);
    while (true) {
      emit(msg);
      int pos = k - 1;
      while (pos >= 0 && msg[pos] == v - 1) msg[pos--] = 0;
      if (pos < 0) break;
      ++msg[pos];
    }
  };
  if (k == m) {
    enumerate_messages([&](const Outcome& msg) { support.push_back(msg); });
  } else if (k == m - 1) {
    enumerate_messages([&](const Outcome& msg) {
      Outcome word = msg;
      int sum = 0;
      for (int s : msg) sum = (sum + s) % v;
      word.push_back(sum);
      support.push_back(word);
    });
  } else {
    if (!GaloisField::is_prime_power(v) || m > v + 1)
      throw std::invalid_argument("no construction available for U(" + std::to_string(k) + "," +
                                  std::to_string(m) + ") at v=" + std::to_string(v));
    GaloisField gf(v);
    auto generator = mds_generator(k, m, v);
    enumerate_messages([&](const Outcome& msg) {
      Outcome word(m, 0);
      for (int col = 0; col < m; ++col) {
        int acc = 0;
        for (int row = 0; row < k; ++row) acc = gf.add(acc, gf.mul(msg[row], generator[row][col]));
        word[col] = acc;
      }
      support.push_back(word);
    });
  }
  std::sort(support.begin(), support.end());
  return support;
}

JointDistribution uniform_on(const std::vector<Outcome>& support, std::vector<int> alphabets) {
  Rational mass = Rational(1) / BigInt(support.size());
  std::map<Outcome, Rational> pmf;
  for (const Outcome& x : support) pmf[x] = mass;
  if (pmf.size() != support.size()) throw std::logic_error("support has duplicate outcomes");
  return JointDistribution(std::move(alphabets), std::move(pmf));
}

}  // namespace

std::vector<Rational> two_level_pmf(int v, double target_nats) {
  if (v < 2) throw std::invalid_argument("alphabet size must be >= 2");
  double lv = std::log(static_cast<double>(v));
  if (!(target_nats > 0.0) || target_nats > lv + kEntropyBisectTol)
    throw std::domain_error("a out of range: need 0 < a <= ln v");
  if (std::abs(target_nats - lv) <= kEntropyBisectTol)
    return std::vector<Rational>(v, Rational(1, v));
  double lo = 1.0 / v, hi = 1.0;
  double p = 0.5 * (lo + hi);
  for (int it = 0; it < kBisectMaxIter; ++it) {
    p = 0.5 * (lo + hi);
    double h = two_level_entropy(v, p);
    if (std::abs(h - target_nats) <= kEntropyBisectTol) break;
    if (h > target_nats) lo = p;
    else hi = p;
  }
  Rational head(p);  // exact binary fraction
  Rational rest = (Rational(1) - head) / (v - 1);
  std::vector<Rational> masses(v, rest);
  masses[0] = head;
  return masses;
}

JointDistribution uniform_matroid_dist(int k, int n, int v) {
  return uniform_on(uniform_support(k, n, v), std::vector<int>(n, v));
}

JointDistribution uniform_matroid_realization(const Matroid& m, int v) {
  auto simple = m.simplification();
  if (!simple.is_uniform)
    throw std::invalid_argument("no construction available: simplification is not uniform");
  int n = m.ground_size();
  if (simple.size == 0) {
    // rank-0: a single constant outcome
    return JointDistribution(std::vector<int>(n, 1), {{Outcome(n, 0), Rational(1)}});
  }
  // class index per non-loop element, in representative order
  std::vector<int> class_of(n + 1, -1);
  const auto& classes = m.parallel_classes();
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int e : mask_elements(classes[c])) class_of[e] = static_cast<int>(c);

  auto code = uniform_support(std::max(simple.rank, 1), simple.size, v);
  std::vector<Outcome> support;
  for (const Outcome& word : code) {
    Outcome x(n, 0);
    for (int e = 1; e <= n; ++e)
      if (class_of[e] >= 0) x[e - 1] = word[class_of[e]];
    support.push_back(x);
  }
  std::vector<int> alphabets(n, 1);
  for (int e = 1; e <= n; ++e)
    if (class_of[e] >= 0) alphabets[e - 1] = v;
  return uniform_on(support, std::move(alphabets));
}

JointDistribution rank_one_dist(SubsetMask alpha, int n, double b) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("coordinate count must be in 1..16");
  if (alpha == 0 || alpha > full_mask(n))
    throw std::invalid_argument("alpha must be a nonempty subset of the ground set");
  if (!(b > 0.0)) throw std::domain_error("entropy target must be positive");
  int w = 2;
  while (std::log(static_cast<double>(w)) < b - kEntropyBisectTol) ++w;
  auto masses = two_level_pmf(w, b);
  std::vector<int> alphabets(n, 1);
  for (int e : mask_elements(alpha)) alphabets[e - 1] = w;
  std::map<Outcome, Rational> pmf;
  for (int t = 0; t < w; ++t) {
    Outcome x(n, 0);
    for (int e : mask_elements(alpha)) x[e - 1] = t;
    pmf[x] = masses[t];
  }
  return JointDistribution(std::move(alphabets), std::move(pmf));
}

Certificate matus_boundary_dist(const Matroid& m, SubsetMask alpha, int v, double a,
                                const ChiOracle& chi) {
  int n = m.ground_size();
  if (alpha == 0 || alpha > full_mask(n))
    throw std::invalid_argument("alpha must be a nonempty subset of the ground set");
  if (!m.connected_after_loop_deletion() || m.full_rank() < 2)
    throw std::invalid_argument("matroid must be connected with rank >= 2");
  if (chi.query(m, v) != Tri::True)
    throw std::domain_error("v not certified in chi_M");
  if (!chi.has_support_construction(m, v))
    throw std::domain_error("no construction available for this matroid at v=" + std::to_string(v));
  double lv = std::log(static_cast<double>(v));
  if (!(a > 0.0) || a > lv + kEntropyBisectTol) throw std::domain_error("a out of range: need 0 < a <= ln v");

  SubsetMask nonloops = full_mask(n) & ~m.loops();
  if (alpha & m.loops())
    throw std::invalid_argument("alpha may not contain loops of the matroid");
  SubsetMask outside = nonloops & ~alpha;
  int designated;
  if (outside != 0) {
    designated = mask_elements(outside).back();
    // needs one free coordinate class: parallel copies of the designated
    // element inherit its marginal, anything else breaks the target vector
    for (SubsetMask cls : m.parallel_classes()) {
      if (cls & (1u << (designated - 1))) {
        if (outside != cls)
          throw std::invalid_argument(
              "alpha must contain every non-loop outside one parallel class");
        break;
      }
    }
  } else {
    SubsetMask chosen = nonloops;
    for (SubsetMask c : m.circuits())
      if (mask_size(c) >= 2) {
        chosen = c;
        break;
      }
    designated = mask_elements(chosen).back();
    if (std::abs(a - lv) > kTol)
      throw std::domain_error("a out of range: faces with alpha covering all non-loops only admit a = ln v");
  }

  JointDistribution base = uniform_matroid_realization(m, v);
  auto q = two_level_pmf(v, a);
  int k = m.full_rank() - 1;
  Rational scale = 1;
  for (int i = 0; i < k; ++i) scale /= v;
  std::map<Outcome, Rational> pmf;
  for (const auto& entry : base.pmf()) {
    const Outcome& x = entry.first;
    pmf[x] = q[x[designated - 1]] * scale;
  }

  Certificate cert{JointDistribution(base.alphabets(), std::move(pmf)),
                   m.rank(),
                   Matroid::uniform({1, alpha, n}).rank(),
                   alpha,
                   v,
                   a,
                   lv - a,
                   0.0};
  EntropyVector h = entropy_vector(cert.distribution);
  for (SubsetMask sub = 0; sub < h.values.size(); ++sub) {
    double expect = cert.a * static_cast<double>(cert.face_m.values[sub]) +
                    cert.b * static_cast<double>(cert.face_u.values[sub]);
    cert.residual = std::max(cert.residual, std::abs(h.values[sub] - expect));
  }
  if (cert.residual >= kTol)
    throw std::domain_error("construction does not realize the requested face point");
  return cert;
}

}  // namespace polyface
