#include "utg/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "utg/error.hpp"
#include "utg/number_theory.hpp"

namespace utg {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  const auto e = extended_gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p));
  return static_cast<std::uint32_t>(floor_mod(e.x, p));
}

Poly make_poly(std::vector<std::uint32_t> c) {
  trim(c);
  return Poly{std::move(c)};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p;
    }
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return make_poly(std::move(out));
}

// Quotient and remainder of a by a nonzero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& divisor, std::uint32_t p) {
  const int db = divisor.degree();
  const std::uint64_t lead_inv = inverse_mod_prime(divisor.coeffs.back(), p);
  std::vector<std::uint64_t> rem(a.coeffs.begin(), a.coeffs.end());
  std::vector<std::uint32_t> quot(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
  for (int k = a.degree(); k >= db; --k) {
    const std::uint64_t c = rem[k] % p;
    if (c == 0) continue;
    const std::uint64_t q = c * lead_inv % p;
    quot[k - db] = static_cast<std::uint32_t>(q);
    for (int j = 0; j <= db; ++j) {
      rem[k - db + j] = (rem[k - db + j] + (p - q) * divisor.coeffs[j]) % p;
    }
  }
  std::vector<std::uint32_t> r(rem.begin(), rem.end());
  if (static_cast<int>(r.size()) > db) r.resize(std::max(db, 0));
  return {make_poly(std::move(quot)), make_poly(std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& divisor, std::uint32_t p) {
  if (a.degree() < divisor.degree()) return a;
  return poly_divmod(a, divisor, p).second;
}

Poly poly_monic(const Poly& f, std::uint32_t p) {
  const std::uint64_t inv = inverse_mod_prime(f.coeffs.back(), p);
  std::vector<std::uint32_t> c(f.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>(f.coeffs[i] * inv % p);
  return Poly{std::move(c)};
}

Poly poly_pow(const Poly& g, int e, std::uint32_t p) {
  Poly r{{1}};
  for (int i = 0; i < e; ++i) r = poly_mul(r, g, p);
  return r;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of k.
Poly monic_from_index(std::uint64_t k, int d, std::uint32_t p) {
  std::vector<std::uint32_t> c(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    c[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  c[d] = 1;
  return Poly{std::move(c)};
}

std::uint64_t poly_code(const Poly& f, std::uint32_t p) {
  std::uint64_t code = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) code = code * p + *it;
  return code;
}

// ---------------------------------------------------------------------------
// Gaussian integers

Gaussian g_mul(Gaussian a, Gaussian b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::int64_t g_norm(Gaussian a) { return a.re * a.re + a.im * a.im; }

// a / b when b divides a exactly.
std::optional<Gaussian> g_div_exact(Gaussian a, Gaussian b) {
  const Gaussian num = g_mul(a, {b.re, -b.im});
  const std::int64_t n = g_norm(b);
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return Gaussian{num.re / n, num.im / n};
}

Gaussian g_pow(Gaussian g, int e) {
  Gaussian r{1, 0};
  for (int i = 0; i < e; ++i) r = g_mul(r, g);
  return r;
}

// ---------------------------------------------------------------------------
// Per-family arithmetic on element indices

struct IntegerArith {
  std::int64_t n;
};

struct PolyArith {
  std::uint32_t p;
  int deg;
  Poly f;  // monic
  std::vector<std::uint32_t> place;  // p^i

  std::vector<std::uint32_t> digits(std::uint32_t idx) const {
    std::vector<std::uint32_t> d(deg);
    for (int i = 0; i < deg; ++i) {
      d[i] = idx % p;
      idx /= p;
    }
    return d;
  }
  Poly decode(std::uint32_t idx) const { return make_poly(digits(idx)); }
  std::uint32_t encode(const Poly& r) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) idx += r.coeffs[i] * place[i];
    return idx;
  }
  std::uint32_t reduce(const Poly& a) const { return encode(poly_mod(a, f, p)); }
};

// Residues x + y*i with 0 <= x < width and 0 <= y < height, where the ideal
// (z) has lattice basis {width, shear + height*i}; height = gcd(re z, im z).
struct GaussArith {
  std::int64_t width;
  std::int64_t height;
  std::int64_t shear;

  Gaussian decode(std::uint32_t idx) const {
    return {static_cast<std::int64_t>(idx) % width, static_cast<std::int64_t>(idx) / width};
  }
  std::uint32_t reduce(Gaussian a) const {
    const std::int64_t k = floor_div(a.im, height);
    const std::int64_t x = floor_mod(a.re - k * shear, width);
    const std::int64_t y = a.im - k * height;
    return static_cast<std::uint32_t>(x + width * y);
  }
};

using FamilyArith = std::variant<IntegerArith, PolyArith, GaussArith>;

std::atomic<std::uint32_t> next_ring_id{1};

// ---------------------------------------------------------------------------
// Parsing

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  std::optional<std::int64_t> digits() {
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end == pos_) return std::nullopt;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + end, v);
    if (ec != std::errc{}) fail("integer out of range");
    pos_ = end;
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

constexpr int kMaxParsedDegree = 4096;
constexpr std::int64_t kMaxGaussianComponent = (std::int64_t{1} << 31) - 1;

Poly parse_poly(Cursor& cur, std::uint32_t p) {
  std::vector<std::uint64_t> acc;
  bool first = true;
  while (cur.peek() != ')' && !cur.done()) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    const auto coef = cur.digits();
    bool has_x = false;
    if (coef) {
      if (cur.accept('*')) {
        if (!cur.accept('x')) cur.fail("expected 'x' after '*'");
        has_x = true;
      } else if (cur.peek() == 'x') {
        cur.fail("expected '*' between coefficient and 'x'");
      }
    } else {
      if (!cur.accept('x')) cur.fail("expected term");
      has_x = true;
    }
    int exponent = 0;
    if (has_x) {
      exponent = 1;
      if (cur.accept('^')) {
        const auto e = cur.digits();
        if (!e) cur.fail("expected exponent");
        if (*e > kMaxParsedDegree) cur.fail("exponent too large");
        exponent = static_cast<int>(*e);
      }
    }
    const std::uint64_t c = static_cast<std::uint64_t>(coef.value_or(1)) % p;
    const std::uint64_t signed_c = sign > 0 ? c : (p - c) % p;
    if (acc.size() <= static_cast<std::size_t>(exponent)) acc.resize(exponent + 1, 0);
    acc[exponent] = (acc[exponent] + signed_c) % p;
    first = false;
  }
  if (first) cur.fail("empty polynomial");
  std::vector<std::uint32_t> c(acc.begin(), acc.end());
  return make_poly(std::move(c));
}

Gaussian parse_gaussian(Cursor& cur) {
  struct Term {
    std::int64_t value;
    bool imaginary;
  };
  auto term = [&](bool need_sign) -> Term {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && need_sign) {
      cur.fail("expected '+' or '-'");
    }
    const auto mag = cur.digits();
    const bool imag = cur.accept('i');
    if (!mag && !imag) cur.fail("expected Gaussian integer");
    const std::int64_t v = mag.value_or(1);
    if (v > kMaxGaussianComponent) cur.fail("component out of range");
    return {sign * v, imag};
  };
  Term t = term(false);
  Gaussian z;
  (t.imaginary ? z.im : z.re) = t.value;
  if (cur.peek() == '+' || cur.peek() == '-') {
    Term u = term(true);
    if (u.imaginary == t.imaginary) cur.fail(t.imaginary ? "expected real part" : "expected imaginary part");
    (u.imaginary ? z.im : z.re) = u.value;
  }
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// Formatting

std::string to_string(const Gaussian& z) {
  if (z.im == 0) return std::to_string(z.re);
  std::string imag;
  const std::int64_t mag = z.im < 0 ? -z.im : z.im;
  imag = (mag == 1 ? "" : std::to_string(mag)) + "i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return std::to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const std::uint32_t c = f.coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string to_string(const Generator& g) {
  return std::visit([](const auto& v) -> std::string {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, std::int64_t>) {
      return std::to_string(v);
    } else {
      return to_string(v);
    }
  }, g);
}

std::string to_string(const RingSpec& spec) {
  return std::visit([](const auto& m) -> std::string {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, IntegerModulus>) {
      return "Z/" + std::to_string(m.n);
    } else if constexpr (std::is_same_v<T, PolyModulus>) {
      return "GF(" + std::to_string(m.p) + ")[x]/(" + to_string(m.f) + ")";
    } else {
      return "Zi/(" + to_string(m.z) + ")";
    }
  }, spec.modulus);
}

RingSpec parse_ring_spec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (static_cast<unsigned char>(c) > 127) {
      throw Error(ErrorKind::ParseError, "non-ASCII input");
    }
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  Cursor cur(s);

  if (starts_with(s, "Zi/(")) {
    cur.expect("Zi/(");
    const Gaussian z = parse_gaussian(cur);
    cur.expect(")");
    if (!cur.done()) cur.fail("trailing characters");
    const std::int64_t n = g_norm(z);
    if (n == 0) throw Error(ErrorKind::InfiniteQuotient, "Zi/(0) is infinite");
    if (n == 1) throw Error(ErrorKind::TrivialQuotient, "modulus " + to_string(z) + " is a unit");
    return RingSpec{GaussianModulus{z}};
  }
  if (starts_with(s, "Z/")) {
    cur.expect("Z/");
    cur.accept('-');  // (n) = (-n)
    const auto n = cur.digits();
    if (!n) cur.fail("expected modulus");
    if (!cur.done()) cur.fail("trailing characters");
    if (*n == 0) throw Error(ErrorKind::InfiniteQuotient, "Z/0 is infinite");
    if (*n == 1) throw Error(ErrorKind::TrivialQuotient, "Z/1 has one element");
    return RingSpec{IntegerModulus{*n}};
  }
  if (starts_with(s, "GF(")) {
    cur.expect("GF(");
    const auto p = cur.digits();
    if (!p) cur.fail("expected characteristic");
    cur.expect(")");
    if (!starts_with(s.substr(s.find(')') + 1), "[x]")) {
      throw Error(ErrorKind::UnsupportedRing, "only the variable x is supported");
    }
    cur.expect("[x]/(");
    if (*p > kMaxGaussianComponent || !is_prime(static_cast<std::uint64_t>(*p))) {
      throw Error(ErrorKind::UnsupportedRing, "GF(" + std::to_string(*p) + ") is not a prime field");
    }
    const auto prime = static_cast<std::uint32_t>(*p);
    Poly f = parse_poly(cur, prime);
    cur.expect(")");
    if (!cur.done()) cur.fail("trailing characters");
    if (f.is_zero()) throw Error(ErrorKind::InfiniteQuotient, "modulus polynomial is zero mod p");
    if (f.degree() == 0) throw Error(ErrorKind::TrivialQuotient, "modulus polynomial is a unit");
    return RingSpec{PolyModulus{prime, std::move(f)}};
  }
  if (s.find('/') != std::string::npos) {
    throw Error(ErrorKind::UnsupportedRing, "unknown ring family in '" + s + "'");
  }
  cur.fail("expected 'Z/', 'GF(' or 'Zi/('");
}

std::uint64_t default_order_cap() {
  if (const char* env = std::getenv("UTG_MAX_ORDER")) {
    std::uint64_t v = 0;
    const std::string_view sv(env);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec == std::errc{} && ptr == sv.data() + sv.size() && v >= 2) return std::min<std::uint64_t>(v, kMaxOrderCap);
  }
  return kDefaultOrderCap;
}

// ---------------------------------------------------------------------------
// QuotientRing

struct QuotientRing::Impl {
  RingSpec spec;
  std::uint32_t order = 0;
  std::uint32_t id = 0;
  std::vector<PrimeFactor> factors;
  FamilyArith arith;
  // powers[i][e - 1] is the generator of P_i^e.
  std::vector<std::vector<Generator>> powers;
  std::vector<std::uint32_t> masks;

  bool member(std::uint32_t idx, std::size_t factor, int e) const {
    const Generator& g = powers[factor][e - 1];
    return std::visit([&](const auto& ar) -> bool {
      using T = std::decay_t<decltype(ar)>;
      if constexpr (std::is_same_v<T, IntegerArith>) {
        return idx % std::get<std::int64_t>(g) == 0;
      } else if constexpr (std::is_same_v<T, PolyArith>) {
        return poly_mod(ar.decode(idx), std::get<Poly>(g), ar.p).is_zero();
      } else {
        return g_div_exact(ar.decode(idx), std::get<Gaussian>(g)).has_value();
      }
    }, arith);
  }
};

namespace {

void sort_factors(std::vector<PrimeFactor>& factors, std::uint32_t p) {
  auto key = [p](const Generator& g) -> std::pair<std::int64_t, std::int64_t> {
    if (auto v = std::get_if<std::int64_t>(&g)) return {*v, 0};
    if (auto f = std::get_if<Poly>(&g)) return {f->degree(), static_cast<std::int64_t>(poly_code(*f, p))};
    const auto& z = std::get<Gaussian>(g);
    return {z.re, z.im};
  };
  std::sort(factors.begin(), factors.end(), [&](const PrimeFactor& a, const PrimeFactor& b) {
    if (a.residue_index != b.residue_index) return a.residue_index < b.residue_index;
    return key(a.generator) < key(b.generator);
  });
}

std::vector<PrimeFactor> factor_poly(Poly f, std::uint32_t p) {
  std::vector<PrimeFactor> out;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t k = 0; k < count && 2 * d <= f.degree(); ++k) {
      const Poly g = monic_from_index(k, d, p);
      int e = 0;
      for (;;) {
        auto [q, r] = poly_divmod(f, g, p);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++e;
      }
      if (e > 0) out.push_back({g, e, checked_pow(p, d), p});
    }
  }
  if (f.degree() >= 1) {
    // Whatever survives has no factor of degree <= deg/2, so it is irreducible.
    bool merged = false;
    for (auto& pf : out) {
      if (std::get<Poly>(pf.generator) == f) {
        ++pf.exponent;
        merged = true;
      }
    }
    if (!merged) out.push_back({f, 1, checked_pow(p, f.degree()), p});
  }
  return out;
}

std::vector<PrimeFactor> factor_gaussian(Gaussian z) {
  std::vector<PrimeFactor> out;
  auto strip = [&](Gaussian pi, std::uint64_t index, std::uint64_t ch) {
    int e = 0;
    while (auto q = g_div_exact(z, pi)) {
      z = *q;
      ++e;
    }
    if (e > 0) out.push_back({pi, e, index, ch});
  };
  for (const auto& pp : factor_integer(static_cast<std::uint64_t>(g_norm(z)))) {
    const std::uint64_t q = pp.prime;
    const auto qi = static_cast<std::int64_t>(q);
    if (q == 2) {
      strip({1, 1}, 2, 2);
    } else if (q % 4 == 3) {
      strip({qi, 0}, q * q, q);
    } else {
      std::int64_t c = 1;
      while (true) {
        const std::int64_t rest = qi - c * c;
        std::int64_t d = 0;
        while ((d + 1) * (d + 1) <= rest) ++d;
        if (d * d == rest) {
          strip({c, d}, q, q);
          strip({d, c}, q, q);
          break;
        }
        ++c;
      }
    }
  }
  return out;
}

}  // namespace

QuotientRing build_quotient_ring(const RingSpec& spec, std::uint64_t order_cap) {
  order_cap = std::min<std::uint64_t>(order_cap, std::uint64_t{1} << 31);
  auto impl = std::make_shared<QuotientRing::Impl>();
  impl->spec = spec;
  impl->id = next_ring_id.fetch_add(1);
  auto over_cap = [&](std::uint64_t order) {
    throw Error(ErrorKind::OrderCapExceeded, to_string(spec) + " has order " +
                                                 (order ? std::to_string(order) : "> 2^63") +
                                                 " above cap " + std::to_string(order_cap));
  };
  std::uint32_t prime_for_sort = 0;

  std::visit([&](const auto& m) {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, IntegerModulus>) {
      if (m.n < 2) throw Error(ErrorKind::TrivialQuotient, "modulus must be at least 2");
      const auto n = static_cast<std::uint64_t>(m.n);
      if (n > order_cap) over_cap(n);
      impl->order = static_cast<std::uint32_t>(n);
      impl->arith = IntegerArith{m.n};
      for (const auto& [p, e] : factor_integer(n)) {
        impl->factors.push_back({static_cast<std::int64_t>(p), e, p, p});
      }
    } else if constexpr (std::is_same_v<T, PolyModulus>) {
      if (!is_prime(m.p)) throw Error(ErrorKind::UnsupportedRing, "characteristic must be prime");
      if (m.f.degree() < 1) throw Error(ErrorKind::TrivialQuotient, "modulus must have degree >= 1");
      const std::uint64_t order = checked_pow(m.p, m.f.degree());
      if (order == 0 || order > order_cap) over_cap(order);
      impl->order = static_cast<std::uint32_t>(order);
      PolyArith ar{m.p, m.f.degree(), poly_monic(m.f, m.p), {}};
      std::uint32_t place = 1;
      for (int i = 0; i < ar.deg; ++i) {
        ar.place.push_back(place);
        place *= m.p;
      }
      impl->factors = factor_poly(ar.f, m.p);
      impl->arith = std::move(ar);
      prime_for_sort = m.p;
    } else {
      const Gaussian z = m.z;
      if (std::max(std::abs(z.re), std::abs(z.im)) > kMaxGaussianComponent) over_cap(0);
      const auto norm = static_cast<std::uint64_t>(g_norm(z));
      if (norm < 2) throw Error(ErrorKind::TrivialQuotient, "modulus must have norm >= 2");
      if (norm > order_cap) over_cap(norm);
      impl->order = static_cast<std::uint32_t>(norm);
      // Solve u*im + v*re = height to get shear + height*i = u*z + v*(i*z).
      const auto e = extended_gcd(z.im, z.re);
      const std::int64_t height = e.gcd;
      const std::int64_t width = static_cast<std::int64_t>(norm) / height;
      const std::int64_t shear = floor_mod(e.x * z.re - e.y * z.im, width);
      impl->arith = GaussArith{width, height, shear};
      impl->factors = factor_gaussian(z);
    }
  }, spec.modulus);

  sort_factors(impl->factors, prime_for_sort);

  for (const auto& pf : impl->factors) {
    std::vector<Generator> pw;
    for (int e = 1; e <= pf.exponent; ++e) {
      std::visit([&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          pw.emplace_back(static_cast<std::int64_t>(checked_pow(g, e)));
        } else if constexpr (std::is_same_v<T, Poly>) {
          pw.emplace_back(poly_pow(g, e, prime_for_sort));
        } else {
          pw.emplace_back(g_pow(g, e));
        }
      }, pf.generator);
    }
    impl->powers.push_back(std::move(pw));
  }

  impl->masks.resize(impl->order);
  for (std::uint32_t idx = 0; idx < impl->order; ++idx) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < impl->factors.size(); ++i) {
      if (impl->member(idx, i, 1)) mask |= 1u << i;
    }
    impl->masks[idx] = mask;
  }

  QuotientRing ring;
  ring.impl_ = std::move(impl);
  return ring;
}

const RingSpec& QuotientRing::spec() const { return impl_->spec; }
std::uint32_t QuotientRing::order() const { return impl_->order; }
const std::vector<PrimeFactor>& QuotientRing::factors() const { return impl_->factors; }
std::uint32_t QuotientRing::id() const { return impl_->id; }

void QuotientRing::check(RingElement a) const {
  if (a.ring_id != impl_->id) {
    throw Error(ErrorKind::MixedRings, "element does not belong to " + name());
  }
  if (a.index >= impl_->order) throw Error(ErrorKind::IndexOutOfRange, "element index");
}

RingElement QuotientRing::element(std::uint64_t index) const {
  if (index >= impl_->order) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element index " + std::to_string(index) + " >= order " + std::to_string(impl_->order));
  }
  return {static_cast<std::uint32_t>(index), impl_->id};
}

RingElement QuotientRing::one() const { return from_integer(1); }

RingElement QuotientRing::from_integer(std::int64_t k) const {
  return std::visit([&](const auto& ar) -> RingElement {
    using T = std::decay_t<decltype(ar)>;
    if constexpr (std::is_same_v<T, IntegerArith>) {
      return element(static_cast<std::uint64_t>(floor_mod(k, ar.n)));
    } else if constexpr (std::is_same_v<T, PolyArith>) {
      return element(static_cast<std::uint64_t>(floor_mod(k, ar.p)));
    } else {
      return element(ar.reduce({k, 0}));
    }
  }, impl_->arith);
}

RingElement QuotientRing::from_generator(const Generator& g) const {
  return std::visit([&](const auto& v) -> RingElement {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Poly>) {
      return reduce(Residue{v.coeffs});
    } else {
      return reduce(Residue{v});
    }
  }, g);
}

RingElement QuotientRing::reduce(const Residue& representative) const {
  const auto family = static_cast<std::size_t>(spec().family());
  if (representative.index() != family) {
    throw Error(ErrorKind::InvalidArgument, "representative does not match the ring family");
  }
  return std::visit([&](const auto& ar) -> RingElement {
    using T = std::decay_t<decltype(ar)>;
    if constexpr (std::is_same_v<T, IntegerArith>) {
      return element(static_cast<std::uint64_t>(floor_mod(std::get<std::int64_t>(representative), ar.n)));
    } else if constexpr (std::is_same_v<T, PolyArith>) {
      auto c = std::get<std::vector<std::uint32_t>>(representative);
      for (auto& x : c) x %= ar.p;
      return element(ar.reduce(make_poly(std::move(c))));
    } else {
      return element(ar.reduce(std::get<Gaussian>(representative)));
    }
  }, impl_->arith);
}

std::vector<RingElement> QuotientRing::elements() const {
  std::vector<RingElement> out(impl_->order);
  for (std::uint32_t i = 0; i < impl_->order; ++i) out[i] = {i, impl_->id};
  return out;
}

Residue QuotientRing::residue(RingElement a) const {
  check(a);
  return std::visit([&](const auto& ar) -> Residue {
    using T = std::decay_t<decltype(ar)>;
    if constexpr (std::is_same_v<T, IntegerArith>) {
      return static_cast<std::int64_t>(a.index);
    } else if constexpr (std::is_same_v<T, PolyArith>) {
      return ar.digits(a.index);
    } else {
      return ar.decode(a.index);
    }
  }, impl_->arith);
}

std::string QuotientRing::format(RingElement a) const {
  const Residue r = residue(a);
  if (auto v = std::get_if<std::int64_t>(&r)) return std::to_string(*v);
  if (auto c = std::get_if<std::vector<std::uint32_t>>(&r)) return to_string(make_poly(*c));
  return to_string(std::get<Gaussian>(r));
}

std::uint32_t QuotientRing::add_index(std::uint32_t a, std::uint32_t b) const {
  return std::visit([&](const auto& ar) -> std::uint32_t {
    using T = std::decay_t<decltype(ar)>;
    if constexpr (std::is_same_v<T, IntegerArith>) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<std::uint32_t>(s >= static_cast<std::uint64_t>(ar.n) ? s - ar.n : s);
    } else if constexpr (std::is_same_v<T, PolyArith>) {
      std::uint32_t out = 0;
      for (int i = 0; i < ar.deg; ++i) {
        std::uint32_t d = a % ar.p + b % ar.p;
        if (d >= ar.p) d -= ar.p;
        out += d * ar.place[i];
        a /= ar.p;
        b /= ar.p;
      }
      return out;
    } else {
      const Gaussian x = ar.decode(a), y = ar.decode(b);
      return ar.reduce({x.re + y.re, x.im + y.im});
    }
  }, impl_->arith);
}

std::uint32_t QuotientRing::neg_index(std::uint32_t a) const {
  return std::visit([&](const auto& ar) -> std::uint32_t {
    using T = std::decay_t<decltype(ar)>;
    if constexpr (std::is_same_v<T, IntegerArith>) {
      return a == 0 ? 0 : static_cast<std::uint32_t>(ar.n - a);
    } else if constexpr (std::is_same_v<T, PolyArith>) {
      std::uint32_t out = 0;
      for (int i = 0; i < ar.deg; ++i) {
        const std::uint32_t d = a % ar.p;
        out += (d == 0 ? 0 : ar.p - d) * ar.place[i];
        a /= ar.p;
      }
      return out;
    } else {
      const Gaussian x = ar.decode(a);
      return ar.reduce({-x.re, -x.im});
    }
  }, impl_->arith);
}

std::uint32_t QuotientRing::mul_index(std::uint32_t a, std::uint32_t b) const {
  return std::visit([&](const auto& ar) -> std::uint32_t {
    using T = std::decay_t<decltype(ar)>;
    if constexpr (std::is_same_v<T, IntegerArith>) {
      return static_cast<std::uint32_t>(std::uint64_t{a} * b % static_cast<std::uint64_t>(ar.n));
    } else if constexpr (std::is_same_v<T, PolyArith>) {
      return ar.reduce(poly_mul(ar.decode(a), ar.decode(b), ar.p));
    } else {
      return ar.reduce(g_mul(ar.decode(a), ar.decode(b)));
    }
  }, impl_->arith);
}

std::uint32_t QuotientRing::prime_mask(std::uint32_t index) const { return impl_->masks[index]; }

RingElement QuotientRing::arith(ArithOp op, RingElement a, std::optional<RingElement> b) const {
  check(a);
  if (op == ArithOp::Neg) return {neg_index(a.index), impl_->id};
  if (!b) throw Error(ErrorKind::InvalidArgument, "binary operation needs two operands");
  check(*b);
  switch (op) {
    case ArithOp::Add:
      return {add_index(a.index, b->index), impl_->id};
    case ArithOp::Sub:
      return {sub_index(a.index, b->index), impl_->id};
    case ArithOp::Mul:
      return {mul_index(a.index, b->index), impl_->id};
    case ArithOp::Neg:
      break;
  }
  return {neg_index(a.index), impl_->id};
}

RingElement QuotientRing::add(RingElement a, RingElement b) const { return arith(ArithOp::Add, a, b); }
RingElement QuotientRing::sub(RingElement a, RingElement b) const { return arith(ArithOp::Sub, a, b); }
RingElement QuotientRing::mul(RingElement a, RingElement b) const { return arith(ArithOp::Mul, a, b); }
RingElement QuotientRing::neg(RingElement a) const { return arith(ArithOp::Neg, a); }

std::optional<RingElement> QuotientRing::inverse(RingElement a) const {
  check(a);
  if (!is_unit(a)) return std::nullopt;
  if (const auto* ar = std::get_if<IntegerArith>(&impl_->arith)) {
    const auto e = extended_gcd(a.index, ar->n);
    return element(static_cast<std::uint64_t>(floor_mod(e.x, ar->n)));
  }
  const std::uint32_t unity = one().index;
  for (std::uint32_t x = 0; x < impl_->order; ++x) {
    if (mul_index(a.index, x) == unity) return element(x);
  }
  return std::nullopt;
}

bool QuotientRing::is_unit(RingElement a) const {
  check(a);
  return impl_->masks[a.index] == 0;
}

bool QuotientRing::in_prime(std::size_t factor_index, RingElement a) const {
  check(a);
  if (factor_index >= impl_->factors.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "factor index " + std::to_string(factor_index));
  }
  return (impl_->masks[a.index] >> factor_index) & 1u;
}

bool QuotientRing::in_prime_power(std::size_t factor_index, RingElement a, int exponent) const {
  check(a);
  if (factor_index >= impl_->factors.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "factor index " + std::to_string(factor_index));
  }
  if (exponent < 1 || exponent > impl_->factors[factor_index].exponent) {
    throw Error(ErrorKind::InvalidArgument, "exponent outside [1, alpha]");
  }
  return impl_->member(a.index, factor_index, exponent);
}

}  // namespace utg
