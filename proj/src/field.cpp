#include "ncinv/field.hpp"

#include <charconv>

namespace ncinv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SubspaceNotContained: return "SubspaceNotContained";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidNodes: return "InvalidNodes";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::CenterNotSplit: return "CenterNotSplit";
    case ErrorKind::CenterNotTwoDim: return "CenterNotTwoDim";
    case ErrorKind::NotCentralSimple: return "NotCentralSimple";
    case ErrorKind::NonSquareDim: return "NonSquareDim";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::UnknownDegree: return "UnknownDegree";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::No: return "false";
    case Decision::Yes: return "true";
    case Decision::Unknown: return "unknown";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<Rationals::Element> square_root(const Rationals&, const Rationals::Element& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

std::optional<PrimeField::Element> square_root(const PrimeField& f, PrimeField::Element x) {
  const std::uint32_t p = f.modulus();
  if (x == 0) return 0u;
  if (p == 2) return x;
  if (f.pow(x, (p - 1) / 2) != 1) return std::nullopt;
  // Tonelli-Shanks
  std::uint32_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint32_t z = 2;
  while (f.pow(z, (p - 1) / 2) != p - 1) ++z;
  std::uint32_t m = s, c = f.pow(z, q), t = f.pow(x, q), r = f.pow(x, (q + 1) / 2);
  while (t != 1) {
    std::uint32_t i = 0, tt = t;
    while (tt != 1) {
      tt = f.mul(tt, tt);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t k = 0; k + i + 1 < m; ++k) b = f.mul(b, b);
    m = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    r = f.mul(r, b);
  }
  return r <= p / 2 ? r : p - r;
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0)
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  return z;
}

// Splits "n/d" (or "n") into numerator and denominator.
std::pair<mpz_class, mpz_class> parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(text), mpz_class(1)};
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return {parse_integer(text.substr(0, slash)), den};
}

}  // namespace

Rationals::Element Rationals::from_int(long long v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return Element(z);
}

Rationals::Element Rationals::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Element q(num, den);
  q.canonicalize();
  return q;
}

Rationals::Element Rationals::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return 1 / a;
}

Rationals::Element Rationals::parse(std::string_view text) const {
  auto [n, d] = parse_fraction(text);
  return from_fraction(n, d);
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Element d = from_integer(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes mod " + std::to_string(p_));
  return mul(from_integer(num), inv(d));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  auto [n, d] = parse_fraction(text);
  return from_fraction(n, d);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  std::string_view rest = text;
  if (!rest.empty() && (rest[0] == 'F' || rest[0] == 'f')) rest.remove_prefix(1);
  if (!rest.empty() && rest[0] == 'p') rest.remove_prefix(1);
  if (!rest.empty() && rest[0] == ':') rest.remove_prefix(1);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || rest.size() == text.size())
    throw Error(ErrorKind::Parse, "unknown field '" + std::string(text) + "' (use Q or F<p>)");
  PrimeField check(p);
  return prime(check.modulus());
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

}  // namespace ncinv
