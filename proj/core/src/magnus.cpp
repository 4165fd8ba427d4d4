#include "schur/magnus.hpp"

#include <charconv>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace schur {

// ---------------------------------------------------------------- FreeWord

FreeWord FreeWord::parse(std::string_view text) {
  FreeWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    if (i >= text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i)
      throw std::invalid_argument("malformed word letter in \"" + std::string(text) + "\"");
    if (v == 0) throw std::invalid_argument("zero generator index forbidden");
    w.letters.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return w;
}

std::vector<FreeWord> FreeWord::parse_list(std::string_view text) {
  std::vector<FreeWord> r;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      r.push_back(parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return r;
}

std::string FreeWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters[i]);
  }
  return s;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

FreeWord FreeWord::sigma_word() const {
  FreeWord w = *this;
  for (int& l : w.letters) l = -l;
  return w;
}

int FreeWord::max_index() const {
  int m = 0;
  for (int l : letters) m = std::max(m, l < 0 ? -l : l);
  return m;
}

// ------------------------------------------------------- TruncatedElement

std::uint64_t TruncatedElement::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto [id, c] : coeffs) {
    h ^= (static_cast<std::uint64_t>(id) << 32) | c;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

// --------------------------------------------------------- MagnusAlgebra

MagnusAlgebra::MagnusAlgebra(std::uint32_t p, unsigned n, unsigned depth)
    : p_(p), n_(n), depth_(depth) {
  require_odd_prime(p);
  if (n < 1 || depth < 2) throw std::invalid_argument("MagnusAlgebra: need n >= 1, depth >= 2");
  offsets_.resize(depth + 1);
  offsets_[0] = 0;
  std::uint64_t count = 0, pw = 1;
  for (unsigned d = 0; d < depth; ++d) {
    offsets_[d] = static_cast<std::uint32_t>(count);
    count += pw;
    pw *= n;
    if (count > (1u << 30)) throw CapExceeded("monomial table too large");
  }
  offsets_[depth] = static_cast<std::uint32_t>(count);

  gen_.resize(n);
  gen_inv_.resize(n);
  for (unsigned j = 0; j < n; ++j) {
    // x_j = 1 + X_j; the variable X_j is the degree-1 monomial with digit j.
    gen_[j].coeffs = {{0, 1}, {offsets_[1] + j, 1}};
    // (1 + X_j)^{-1} = sum_{k<depth} (-X_j)^k; monomial j^k = offsets_[k] + j * (n^k-1)/(n-1)
    TruncatedElement inv;
    std::uint32_t digits = 0;
    for (unsigned k = 0; k < depth; ++k) {
      std::uint32_t c = (k % 2 == 0) ? 1 : p - 1;
      inv.coeffs.push_back({offsets_[k] + digits, c});
      digits = digits * n + j;
    }
    gen_inv_[j] = std::move(inv);
  }

  // Per-monomial images under X_j -> (1+X_j)^{-1} - 1, extended linearly.
  sigma_img_.resize(monomial_count());
  sigma_img_[0] = one();
  for (unsigned j = 0; j < n; ++j) {
    TruncatedElement y = gen_inv_[j];  // (1+X_j)^{-1}
    // subtract 1
    y.coeffs.erase(y.coeffs.begin());
    sigma_img_[offsets_[1] + j] = std::move(y);
  }
  for (unsigned d = 2; d < depth; ++d) {
    for (std::uint32_t id = offsets_[d]; id < offsets_[d + 1]; ++id) {
      std::uint32_t digits = id - offsets_[d];
      std::uint32_t prefix = offsets_[d - 1] + digits / n;
      std::uint32_t last = offsets_[1] + digits % n;
      sigma_img_[id] = mul(sigma_img_[prefix], sigma_img_[last]);
    }
  }
  // The images above are non-units (no constant term); mul() tolerates that.
}

TruncatedElement MagnusAlgebra::one() const { return TruncatedElement{{{0, 1}}}; }

TruncatedElement MagnusAlgebra::generator(unsigned j, int sign) const {
  if (j < 1 || j > n_) throw std::invalid_argument("generator index out of range");
  return sign >= 0 ? gen_[j - 1] : gen_inv_[j - 1];
}

unsigned MagnusAlgebra::monomial_degree(std::uint32_t id) const {
  unsigned d = 0;
  while (id >= offsets_[d + 1]) ++d;
  return d;
}

std::uint32_t MagnusAlgebra::concat(std::uint32_t a, std::uint32_t b) const {
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  std::uint32_t va = a - offsets_[da], vb = b - offsets_[db];
  std::uint32_t v = va;
  for (unsigned i = 0; i < db; ++i) v *= n_;
  return offsets_[da + db] + v + vb;
}

TruncatedElement MagnusAlgebra::mul(const TruncatedElement& a, const TruncatedElement& b) const {
  std::vector<std::uint32_t> dense(monomial_count(), 0);
  for (auto [ia, ca] : a.coeffs) {
    unsigned da = monomial_degree(ia);
    for (auto [ib, cb] : b.coeffs) {
      unsigned db = monomial_degree(ib);
      if (da + db >= depth_) break;  // b's coeffs are sorted by id, hence by degree
      std::uint32_t id = concat(ia, ib);
      dense[id] = fp_add(dense[id], fp_mul(ca, cb, p_), p_);
    }
  }
  TruncatedElement r;
  for (std::uint32_t id = 0; id < dense.size(); ++id)
    if (dense[id]) r.coeffs.push_back({id, dense[id]});
  return r;
}

TruncatedElement MagnusAlgebra::inverse(const TruncatedElement& a) const {
  if (a.coeffs.empty() || a.coeffs[0].first != 0 || a.coeffs[0].second != 1)
    throw std::invalid_argument("inverse: not a unit with constant term 1");
  TruncatedElement u = a;  // u := a - 1
  u.coeffs.erase(u.coeffs.begin());
  TruncatedElement r = one(), pw = one();
  for (unsigned k = 1; k < depth_ && !pw.coeffs.empty(); ++k) {
    pw = mul(pw, u);
    if (pw.coeffs.empty()) break;
    // r += (-1)^k pw
    std::vector<std::uint32_t> dense(monomial_count(), 0);
    for (auto [id, c] : r.coeffs) dense[id] = c;
    for (auto [id, c] : pw.coeffs) {
      std::uint32_t s = (k % 2 == 1) ? fp_sub(0, c, p_) : c;
      dense[id] = fp_add(dense[id], s, p_);
    }
    r.coeffs.clear();
    for (std::uint32_t id = 0; id < dense.size(); ++id)
      if (dense[id]) r.coeffs.push_back({id, dense[id]});
  }
  return r;
}

TruncatedElement MagnusAlgebra::sigma(const TruncatedElement& a) const {
  std::vector<std::uint32_t> dense(monomial_count(), 0);
  for (auto [id, c] : a.coeffs) {
    if (id == 0) {
      dense[0] = fp_add(dense[0], c, p_);
      continue;
    }
    for (auto [jd, jc] : sigma_img_[id].coeffs)
      dense[jd] = fp_add(dense[jd], fp_mul(c, jc, p_), p_);
  }
  TruncatedElement r;
  for (std::uint32_t id = 0; id < dense.size(); ++id)
    if (dense[id]) r.coeffs.push_back({id, dense[id]});
  return r;
}

bool MagnusAlgebra::is_one(const TruncatedElement& a) const {
  return a.coeffs.size() == 1 && a.coeffs[0].first == 0 && a.coeffs[0].second == 1;
}

bool MagnusAlgebra::is_odd(const TruncatedElement& a) const {
  return is_one(mul(sigma(a), a));
}

TruncatedElement MagnusAlgebra::eval(const FreeWord& w) const {
  if (w.max_index() > static_cast<int>(n_))
    throw std::invalid_argument("word letter out of range for n = " + std::to_string(n_));
  TruncatedElement r = one();
  for (int l : w.letters) r = mul(r, l > 0 ? gen_[l - 1] : gen_inv_[-l - 1]);
  return r;
}

TruncatedElement MagnusAlgebra::truncate_to(const TruncatedElement& a,
                                            const MagnusAlgebra& target) const {
  if (target.p_ != p_ || target.n_ != n_ || target.depth_ > depth_)
    throw std::invalid_argument("truncate_to: incompatible target context");
  TruncatedElement r;
  for (auto [id, c] : a.coeffs)
    if (id < target.monomial_count()) r.coeffs.push_back({id, c});
  return r;
}

// -------------------------------------------------------- enumerate_group

namespace {

struct ElemKeyHash {
  std::size_t operator()(const TruncatedElement& e) const { return e.hash(); }
};

}  // namespace

SigmaGroup enumerate_group(std::uint32_t p, unsigned n, unsigned depth, std::uint64_t size_cap) {
  GradedDims dims = witt_graded_dims(p, n, depth);
  Int predicted = dims.group_order();
  if (predicted > size_cap)
    throw CapExceeded("enumerate_group: predicted order " + predicted.str() +
                      " exceeds cap " + std::to_string(size_cap));
  const std::uint32_t expected = static_cast<std::uint32_t>(predicted);

  MagnusAlgebra A(p, n, depth);
  std::vector<TruncatedElement> letter_img;
  for (unsigned j = 1; j <= n; ++j) letter_img.push_back(A.generator(j, +1));
  for (unsigned j = 1; j <= n; ++j) letter_img.push_back(A.generator(j, -1));

  std::vector<TruncatedElement> elems;
  std::unordered_map<TruncatedElement, std::uint32_t, ElemKeyHash> index;
  elems.reserve(expected);
  elems.push_back(A.one());
  index.emplace(elems[0], 0);
  std::vector<std::vector<std::uint32_t>> act(2 * n, std::vector<std::uint32_t>(expected, 0));

  for (std::uint32_t g = 0; g < elems.size(); ++g) {
    for (unsigned l = 0; l < 2 * n; ++l) {
      TruncatedElement t = A.mul(elems[g], letter_img[l]);
      auto it = index.find(t);
      if (it == index.end()) {
        if (elems.size() >= expected)
          throw std::logic_error("enumerate_group: closure exceeds Witt prediction");
        std::uint32_t id = static_cast<std::uint32_t>(elems.size());
        elems.push_back(t);
        it = index.emplace(std::move(t), id).first;
      }
      act[l][g] = it->second;
    }
  }
  if (elems.size() != expected)
    throw std::logic_error("enumerate_group: closure order " + std::to_string(elems.size()) +
                           " != Witt prediction " + predicted.str());

  std::vector<std::uint32_t> sigma_perm(elems.size());
  for (std::uint32_t g = 0; g < elems.size(); ++g) {
    auto it = index.find(A.sigma(elems[g]));
    if (it == index.end()) throw std::logic_error("enumerate_group: sigma left the closure");
    sigma_perm[g] = it->second;
  }

  std::vector<std::uint32_t> gens(n);
  for (unsigned j = 0; j < n; ++j) gens[j] = index.at(letter_img[j]);

  return SigmaGroup::build(n, std::move(act), std::move(sigma_perm), std::move(gens), p);
}

}  // namespace schur
