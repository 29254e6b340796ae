#include "realbundles/census.hpp"

#include <future>
#include <numeric>
#include <thread>

namespace rbp {

namespace {

bool gl_like(const GroupSpec& g) { return g.family == Family::GL; }

unsigned long long ipow(unsigned long long base, int exp) {
  unsigned long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

bool quaternionic_admissible(const GroupSpec& g, const RealCurve& curve, long degree) {
  long target = static_cast<long>(g.n) * (curve.genus - 1);
  bool parity = ((degree - target) % 2 + 2) % 2 == 0;
  if (curve.r == 0) return parity;  // no fixed circle carries a point cocycle
  return parity && g.n % 2 == 0;    // circles need the J class, hence even rank
}

// Counting walk over the per-circle choice tuples for one class sector,
// evaluating the degree/Stiefel-Whitney constraint per tuple. `sw` maps each
// per-circle choice to its Stiefel-Whitney contribution (always 0 for
// connected stabilizers); the innermost circle is unrolled so the predicate
// inlines.
template <class Pred>
unsigned long long walk_tuple_range(int r, const std::vector<int>& sw_in, Pred ok, int first_lo,
                                    int first_hi) {
  const int radix = static_cast<int>(sw_in.size());
  // local copies keep the hot loop free of aliasing with the odometer stores
  int sw[32];
  for (int i = 0; i < radix; ++i) sw[i] = sw_in[i];
  unsigned long long count = 0;
  if (r == 1) {
    for (int v = first_lo; v < first_hi; ++v) count += ok(sw[v]) ? 1 : 0;
    return count;
  }
  if (r == 2) {
    for (int first = first_lo; first < first_hi; ++first)
      for (int v = 0; v < radix; ++v) count += ok(sw[first] + sw[v]) ? 1 : 0;
    return count;
  }
  // r >= 3: odometer over the middle r-3 circles, innermost two unrolled
  int mid[16] = {0};
  for (int first = first_lo; first < first_hi; ++first) {
    for (int i = 0; i < r - 3; ++i) mid[i] = 0;
    long sum = sw[first];
    for (int i = 0; i < r - 3; ++i) sum += sw[0];
    for (;;) {
      unsigned inner = 0;
      for (int v2 = 0; v2 < radix; ++v2) {
        const long s2 = sum + sw[v2];
        for (int v = 0; v < radix; ++v) inner += ok(s2 + sw[v]) ? 1u : 0u;
      }
      count += inner;
      int pos = r - 4;
      while (pos >= 0) {
        sum -= sw[mid[pos]];
        if (++mid[pos] < radix) {
          sum += sw[mid[pos]];
          break;
        }
        mid[pos] = 0;
        sum += sw[mid[pos]];
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return count;
}

template <class Pred>
unsigned long long walk_tuples(int r, const std::vector<int>& sw, Pred ok) {
  const int radix = static_cast<int>(sw.size());
  double total_tuples = 1;
  for (int i = 0; i < r; ++i) total_tuples *= radix;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (total_tuples < 4e6 || radix < 2 || threads == 1 || r < 2)
    return walk_tuple_range(r, sw, ok, 0, radix);
  std::vector<std::future<unsigned long long>> futures;
  int per = (radix + static_cast<int>(threads) - 1) / static_cast<int>(threads);
  for (int lo = 0; lo < radix; lo += per)
    futures.push_back(std::async(std::launch::async, [&, lo] {
      return walk_tuple_range(r, sw, ok, lo, std::min(radix, lo + per));
    }));
  unsigned long long total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

struct Sector {
  CentralLabel label;
  std::string name;
};

std::vector<Sector> census_sectors(const GroupSpec& g, std::optional<CentralLabel> filter) {
  // one sector per literal class of H^2(Z/2Z, Z)
  std::vector<Sector> sectors;
  for (const CentralClass& c : center_real_classes(g)) {
    if (c.label == CentralLabel::NonInvolutive) continue;  // not enumerable; flagged elsewhere
    if (filter && *filter != c.label) continue;
    sectors.push_back({c.label, c.label == CentralLabel::Trivial
                                    ? std::string("real (Stiefel-Whitney)")
                                    : std::string("quaternionic")});
  }
  if (filter && sectors.empty())
    fail(Errc::UnsupportedCentralClass,
         "requested class is not a literal H^2 class of " + g.name());
  return sectors;
}

}  // namespace

CensusResult count_components(const GroupSpec& g, const RealCurve& curve, long degree,
                              std::optional<CentralLabel> c) {
  if (!gl_like(g)) fail(Errc::UnsupportedFamily, "census is worked out for gl families only");
  make_curve(curve.genus, curve.kind, curve.r);

  CensusResult out;
  out.group = g;
  out.curve = curve;
  out.degree = degree;
  out.c_filter = c;
  out.is_lower_bound = true;
  out.exact_when_coprime = std::gcd(static_cast<long>(g.n), std::abs(degree)) == 1;

  const int r = curve.r;
  for (const Sector& sector : census_sectors(g, c)) {
    unsigned long long n = 0;
    if (g.structure == RealStructure::Conjugation) {
      if (sector.label == CentralLabel::Trivial) {
        n = r >= 1 ? ipow(2, r - 1) : (degree % 2 == 0 ? 1 : 0);
      } else {
        n = quaternionic_admissible(g, curve, degree) ? 1 : 0;
      }
    } else {
      // compact type: even degree, n+1 signatures per circle
      n = (degree % 2 == 0) ? ipow(g.n + 1, r) : 0;
      out.breakdown.emplace_back("signature tuples", n);
      out.count += n;
      continue;
    }
    out.breakdown.emplace_back(sector.name, n);
    out.count += n;
  }
  return out;
}

CensusResult brute_force_census(const GroupSpec& g, const RealCurve& curve, long degree,
                                std::optional<CentralLabel> c) {
  if (!gl_like(g)) fail(Errc::UnsupportedFamily, "census is worked out for gl families only");
  make_curve(curve.genus, curve.kind, curve.r);
  const int r = curve.r;
  if (r > 12) fail(Errc::TooLarge, "brute force is capped at r = 12");

  CensusResult out;
  out.group = g;
  out.curve = curve;
  out.degree = degree;
  out.c_filter = c;
  out.is_lower_bound = true;
  out.exact_when_coprime = std::gcd(static_cast<long>(g.n), std::abs(degree)) == 1;

  DegreeWindow window{degree, degree};
  for (const Sector& sector : census_sectors(g, c)) {
    CentralClass param = sector.label == CentralLabel::Trivial
                             ? trivial_central_class()
                             : central_class(g, CentralLabel::MinusOne);
    std::vector<CohomologyClass> classes = enumerate_classes(g, param);

    unsigned long long n = 0;
    if (r == 0 || classes.empty()) {
      n = enumerate_types(g, curve, param, window).size();
    } else {
      // flatten (alpha, beta) choices per circle
      std::vector<int> sw;
      for (const CohomologyClass& cls : classes) {
        bool known = true;
        int range = beta_range(g, cls, known);
        for (int b = 0; b < range; ++b) sw.push_back(b);
      }
      double tuples = 1;
      for (int i = 0; i < r; ++i) tuples *= sw.size();
      if (tuples <= double(1 << 16)) {
        n = enumerate_types(g, curve, param, window).size();
      } else if (g.structure == RealStructure::Conjugation &&
                 sector.label == CentralLabel::Trivial) {
        n = walk_tuples(r, sw,
                        [degree](long sum) { return ((degree - sum) % 2 + 2) % 2 == 0; });
      } else if (g.structure == RealStructure::Conjugation) {
        bool adm = quaternionic_admissible(g, curve, degree);
        n = walk_tuples(r, sw, [adm](long) { return adm; });
      } else {
        bool even = degree % 2 == 0;
        n = walk_tuples(r, sw, [even](long) { return even; });
      }
    }
    std::string name = g.structure == RealStructure::CompactType ? "signature tuples"
                                                                 : sector.name;
    out.breakdown.emplace_back(name, n);
    out.count += n;
  }
  return out;
}

}  // namespace rbp
