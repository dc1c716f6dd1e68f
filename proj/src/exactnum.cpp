#include "hypcox/exactnum.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace hypcox {

bool is_squarefree_generator(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

FieldScalar::FieldScalar(const mpq_class& value) : a_(value.get_num()), c_(value.get_den()) {}

FieldScalar::FieldScalar(mpz_class a, mpz_class b, mpz_class c, long d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {
  if (sgn(c_) == 0) throw FieldError("zero denominator");
  if (d_ != 0 && !is_squarefree_generator(d_)) {
    throw FieldError("field generator " + std::to_string(d_) + " is not squarefree");
  }
  if (d_ == 0 && sgn(b_) != 0) throw FieldError("irrational part in the rational field");
  normalize();
}

FieldScalar FieldScalar::rational(long num, long den) {
  return FieldScalar(mpz_class(num), mpz_class(0), mpz_class(den), 0);
}

FieldScalar FieldScalar::root(long d) {
  return FieldScalar(mpz_class(0), mpz_class(1), mpz_class(1), d);
}

void FieldScalar::normalize() {
  if (sgn(c_) < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
  if (sgn(a_) == 0 && sgn(b_) == 0) c_ = 1;
}

long FieldScalar::join_fields(long d1, long d2) {
  if (d1 == d2) return d1;
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  throw FieldError("mismatched fields: sqrt(" + std::to_string(d1) + ") and sqrt(" +
                   std::to_string(d2) + ")");
}

int FieldScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with d*b^2.
  const mpz_class lhs = a_ * a_;
  const mpz_class rhs = d_ * (b_ * b_);
  return lhs > rhs ? sa : sb;
}

FieldScalar FieldScalar::conjugate() const {
  FieldScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

mpq_class FieldScalar::norm() const {
  mpq_class r(a_ * a_ - d_ * b_ * b_, c_ * c_);
  r.canonicalize();
  return r;
}

mpq_class FieldScalar::rational_value() const {
  if (!is_rational()) throw FieldError("value " + to_string() + " is irrational");
  mpq_class r(a_, c_);
  r.canonicalize();
  return r;
}

mpf_class FieldScalar::to_mpf(unsigned bits) const {
  mpf_class a(a_, bits), b(b_, bits), c(c_, bits), d(d_, bits);
  mpf_class root = sqrt(d);
  return (a + b * root) / c;
}

std::string FieldScalar::to_string() const {
  std::ostringstream os;
  if (is_rational()) {
    os << a_;
    if (c_ != 1) os << '/' << c_;
    return os.str();
  }
  const bool bare = c_ == 1;
  if (!bare) os << '(';
  if (sgn(a_) != 0) {
    os << a_;
    os << (sgn(b_) < 0 ? "-" : "+");
    os << abs(b_) << "*r" << d_;
  } else {
    os << b_ << "*r" << d_;
  }
  if (!bare) os << ")/" << c_;
  return os.str();
}

namespace {

// Parses a signed integer optionally followed by "*rD" (a multiple of the
// generator). Returns false at end of input.
bool parse_term(const std::string& s, size_t& pos, mpz_class& coeff, bool& is_root) {
  if (pos >= s.size()) return false;
  int sign = 1;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  std::string digits = s.substr(start, pos - start);
  is_root = false;
  if (pos < s.size() && (s[pos] == '*' || s[pos] == 'r')) {
    if (s[pos] == '*') ++pos;
    if (pos >= s.size() || s[pos] != 'r') throw FieldError("malformed field element: " + s);
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    is_root = true;
    if (digits.empty()) digits = "1";
  }
  if (digits.empty()) throw FieldError("malformed field element: " + s);
  coeff = mpz_class(digits);
  if (sign < 0) coeff = -coeff;
  return true;
}

}  // namespace

FieldScalar FieldScalar::parse(const std::string& text, long d) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw FieldError("empty field element");
  std::string num = s;
  mpz_class den = 1;
  const size_t slash = s.rfind('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = mpz_class(s.substr(slash + 1));
  }
  if (num.size() >= 2 && num.front() == '(' && num.back() == ')') num = num.substr(1, num.size() - 2);
  mpz_class a = 0, b = 0, coeff;
  size_t pos = 0;
  bool is_root = false;
  while (parse_term(num, pos, coeff, is_root)) {
    (is_root ? b : a) += coeff;
  }
  return FieldScalar(a, b, den, sgn(b) != 0 ? d : 0);
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& y) {
  d_ = join_fields(d_, y.d_);
  if (c_ == y.c_) {
    a_ += y.a_;
    b_ += y.b_;
  } else {
    a_ = a_ * y.c_ + y.a_ * c_;
    b_ = b_ * y.c_ + y.b_ * c_;
    c_ *= y.c_;
  }
  normalize();
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& y) { return *this += -y; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& y) {
  d_ = join_fields(d_, y.d_);
  mpz_class na = a_ * y.a_ + d_ * (b_ * y.b_);
  mpz_class nb = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ *= y.c_;
  normalize();
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& y) {
  if (y.is_zero()) throw FieldError("division by zero");
  d_ = join_fields(d_, y.d_);
  // x / y = x * conj(y) * y.c / (y.a^2 - d y.b^2)
  const mpz_class n = y.a_ * y.a_ - d_ * (y.b_ * y.b_);
  mpz_class na = (a_ * y.a_ - d_ * (b_ * y.b_)) * y.c_;
  mpz_class nb = (b_ * y.a_ - a_ * y.b_) * y.c_;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ *= n;
  normalize();
  return *this;
}

bool operator==(const FieldScalar& x, const FieldScalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_) return false;
  return sgn(x.b_) == 0 || x.d_ == y.d_;
}

}  // namespace hypcox
