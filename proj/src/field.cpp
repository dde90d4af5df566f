#include "srkit/field.hpp"

#include <charconv>
#include <stdexcept>

namespace srkit {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q" || text == "Q" || text == "0")
        return rationals();
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size() || p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("unrecognised field '" + std::string(text) + "' (expected a prime or q)");
    return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::vector<FieldSpec> verification_fields()
{
    return {kGF2, kGF3, kRationals};
}

} // namespace srkit
