#ifndef SRKIT_FIELD_HPP
#define SRKIT_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace srkit {

/// The coefficient field k: GF(p) for a prime p < 2^31, or Q.
class FieldSpec {
public:
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Accepts "q"/"Q"/"0" for the rationals and a decimal prime otherwise.
    static FieldSpec parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}

    std::uint32_t p_;
};

inline const FieldSpec kGF2 = FieldSpec::prime(2);
inline const FieldSpec kGF3 = FieldSpec::prime(3);
inline const FieldSpec kRationals = FieldSpec::rationals();

/// GF(2), GF(3), Q: the fields every field-uniform claim is swept over.
std::vector<FieldSpec> verification_fields();

bool is_prime(std::uint64_t p);

} // namespace srkit

#endif
