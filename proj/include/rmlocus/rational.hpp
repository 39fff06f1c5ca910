#ifndef RMLOCUS_RATIONAL_HPP
#define RMLOCUS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace rmlocus {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Base for every library error; `name()` is the stable error identifier.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define RMLOCUS_ERROR(Cls)                                                   \
    class Cls : public Error {                                               \
    public:                                                                  \
        explicit Cls(const std::string& what) : Error(#Cls, what) {}         \
    }

RMLOCUS_ERROR(InvalidInput);
RMLOCUS_ERROR(InternalError);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& c, const Vector& v);

// Scales to a primitive integer vector; with `fix_sign` the first nonzero
// entry is made positive, otherwise only positive scalings are used.
Vector primitive(const Vector& v, bool fix_sign = true);

} // namespace rmlocus

#endif
