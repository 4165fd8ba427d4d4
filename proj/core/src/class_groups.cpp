#include "schur/class_groups.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace schur {

namespace {

bool squarefree_trial(long long m) {
  for (long long q = 2; q * q <= m; ++q)
    if (m % (q * q) == 0) return false;
  return true;
}

}  // namespace

bool is_fundamental_discriminant(long long d) {
  if (d >= 0) return false;
  long long m = -d;
  if (m % 4 == 3) return squarefree_trial(m);
  if (m % 4 == 0) {
    long long m4 = m / 4;
    return (m4 % 4 == 1 || m4 % 4 == 2) && squarefree_trial(m4);
  }
  return false;
}

QuadForm principal_form(long long d) {
  if (d >= 0) throw std::invalid_argument("principal_form: need d < 0");
  if ((d & 1) == 0) return QuadForm{1, 0, -d / 4};
  return QuadForm{1, 1, (1 - d) / 4};
}

QuadForm reduce(QuadForm f) {
  for (;;) {
    // normalize b into (-a, a]
    long long two_a = 2 * f.a;
    long long r = ((f.b % two_a) + two_a) % two_a;  // in [0, 2a)
    if (r > f.a) r -= two_a;                        // in (-a, a]
    long long d = f.discriminant();
    f.b = r;
    f.c = (f.b * f.b - d) / (4 * f.a);
    if (f.a > f.c) {
      f = QuadForm{f.c, -f.b, f.a};
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  if (f.discriminant() != g.discriminant())
    throw std::invalid_argument("compose: discriminant mismatch");
  const long long d = f.discriminant();
  long long a1 = f.a, b1 = f.b, c1 = f.c;
  long long a2 = g.a, b2 = g.b, c2 = g.c;
  if (a1 > a2) { std::swap(a1, a2); std::swap(b1, b2); std::swap(c1, c2); }
  (void)c1;
  long long s = (b1 + b2) / 2, n = b2 - s;

  long long y1, dd;
  if (a2 % a1 == 0) { y1 = 0; dd = a1; }
  else {
    long long u, v;
    dd = ext_gcd(a2, a1, u, v);
    y1 = u;
  }
  long long x2, y2, d1;
  if (s % dd == 0) { y2 = -1; x2 = 0; d1 = dd; }
  else {
    long long u, v;
    d1 = ext_gcd(s, dd, u, v);
    x2 = u;
    y2 = -v;
  }
  long long v1 = a1 / d1, v2 = a2 / d1;
  long long r = ((y1 * y2 * n - x2 * c2) % v1 + v1) % v1;
  QuadForm h;
  h.a = v1 * v2;
  h.b = b2 + 2 * v2 * r;
  h.c = (h.b * h.b - d) / (4 * h.a);
  return reduce(h);
}

std::vector<QuadForm> reduced_forms(long long d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("reduced_forms: need a negative fundamental discriminant");
  if (-d >= (1ll << 40))
    throw CapExceeded("reduced_forms: |d| too large for 64-bit composition arithmetic");
  std::vector<QuadForm> forms;
  long long a_max = static_cast<long long>(std::sqrt(static_cast<double>(-d) / 3.0)) + 1;
  for (long long a = 1; a <= a_max; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      if (((b - d) & 1) != 0) continue;  // b and d must have equal parity
      long long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      QuadForm q{a, b, c};
      if (q.is_reduced()) forms.push_back(q);
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

FormClassGroup::FormClassGroup(long long d) : d_(d), forms_(reduced_forms(d)) {
  id_ = index_of(reduce(principal_form(d)));
}

std::size_t FormClassGroup::index_of(const QuadForm& reduced) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), reduced);
  if (it == forms_.end() || !(*it == reduced))
    throw std::logic_error("FormClassGroup: form not in the reduced list");
  return static_cast<std::size_t>(it - forms_.begin());
}

std::size_t FormClassGroup::compose_idx(std::size_t i, std::size_t j) const {
  return index_of(compose(forms_[i], forms_[j]));
}

std::size_t FormClassGroup::power_idx(std::size_t i, std::uint64_t e) const {
  std::size_t r = id_, b = i;
  while (e) {
    if (e & 1) r = compose_idx(r, b);
    b = compose_idx(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned> FormClassGroup::p_sylow_type(std::uint32_t p) const {
  require_odd_prime(p);
  std::uint64_t h = class_number();
  unsigned v = 0;
  std::uint64_t q = h;
  while (q % p == 0) { q /= p; ++v; }
  if (v == 0) return {};
  // project every class into the Sylow subgroup
  std::vector<std::size_t> sylow;
  {
    std::vector<bool> seen(forms_.size(), false);
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      std::size_t s = power_idx(i, q);
      if (!seen[s]) { seen[s] = true; sylow.push_back(s); }
    }
  }
  std::vector<Int> counts;
  std::uint64_t pk = 1;
  for (;;) {
    std::uint64_t c = 0;
    for (std::size_t s : sylow)
      if (power_idx(s, pk) == id_) ++c;
    counts.push_back(Int(c));
    if (c == sylow.size()) { counts.push_back(Int(c)); break; }
    pk *= p;
  }
  return partition_from_power_counts(p, counts);
}

Int abelian_p_aut_order(std::uint32_t p, const std::vector<unsigned>& partition) {
  require_odd_prime(p);
  // type e_1 <= e_2 <= ... <= e_n; d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k}
  std::vector<unsigned> e(partition.rbegin(), partition.rend());
  const std::size_t n = e.size();
  if (n == 0) return 1;
  auto ppow = [p](long long x) {
    Int r = 1;
    for (long long i = 0; i < x; ++i) r *= p;
    return r;
  };
  std::vector<std::size_t> dk(n), ck(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lo = k, hi = k;
    while (lo > 0 && e[lo - 1] == e[k]) --lo;
    while (hi + 1 < n && e[hi + 1] == e[k]) ++hi;
    ck[k] = lo + 1;
    dk[k] = hi + 1;
  }
  Int r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= ppow(static_cast<long long>(dk[k])) - ppow(static_cast<long long>(k));
  for (std::size_t j = 0; j < n; ++j) r *= ppow(static_cast<long long>(e[j]) * static_cast<long long>(n - dk[j]));
  for (std::size_t i = 0; i < n; ++i) r *= ppow(static_cast<long long>(e[i] - 1) * static_cast<long long>(n - ck[i] + 1));
  return r;
}

std::string partition_str(const std::vector<unsigned>& partition) {
  if (partition.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(partition[i]);
  }
  return s + ")";
}

namespace {

// fundamental |d| values in (0, bound), via a squarefree sieve
std::vector<long long> fundamental_list(long long bound) {
  std::vector<bool> sf(bound + 1, true);
  for (long long q = 2; q * q <= bound; ++q)
    for (long long m = q * q; m <= bound; m += q * q) sf[m] = false;
  std::vector<long long> out;
  for (long long m = 3; m < bound; ++m) {
    if (m % 4 == 3 && sf[m]) out.push_back(m);
    else if (m % 4 == 0) {
      long long m4 = m / 4;
      if ((m4 % 4 == 1 || m4 % 4 == 2) && sf[m4]) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

std::vector<SurveyRow> survey_rows(const SurveyOptions& opt) {
  require_odd_prime(opt.p);
  auto ms = fundamental_list(opt.bound);
  std::vector<SurveyRow> rows(ms.size());
  const unsigned workers = std::max(1u, opt.workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < ms.size(); i += workers) {
      long long d = -ms[i];
      if (!opt.include_p_dividing && d % opt.p == 0) { rows[i].d = 0; continue; }
      if (opt.modulus > 0 &&
          ((d % opt.modulus) + opt.modulus) % opt.modulus != ((opt.residue % opt.modulus) + opt.modulus) % opt.modulus) {
        rows[i].d = 0;
        continue;
      }
      FormClassGroup cg(d);
      rows[i] = SurveyRow{d, cg.class_number(), cg.p_sylow_type(opt.p)};
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<SurveyRow> out;
  out.reserve(rows.size());
  for (auto& r : rows)
    if (r.d != 0) out.push_back(std::move(r));
  return out;
}

SurveyReport survey(const SurveyOptions& opt) {
  SurveyReport rep;
  rep.options = opt;
  rep.c_inf = c_constant_inf(opt.p, 1e-12);
  std::map<std::vector<unsigned>, std::uint64_t> tally;
  for (const SurveyRow& r : survey_rows(opt)) {
    ++tally[r.partition];
    ++rep.discriminants;
  }
  for (auto& [partition, count] : tally) {
    SurveyTypeRecord t;
    t.partition = partition;
    t.count = count;
    t.frequency = static_cast<double>(count) / static_cast<double>(rep.discriminants);
    t.prediction = rep.c_inf / static_cast<double>(abelian_p_aut_order(opt.p, partition));
    rep.types.push_back(std::move(t));
  }
  return rep;
}

std::string SurveyReport::to_csv_header() const { return "partition,count,frequency,prediction"; }

}  // namespace schur
