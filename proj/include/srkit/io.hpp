#ifndef SRKIT_IO_HPP
#define SRKIT_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srkit/betti.hpp"
#include "srkit/complex.hpp"
#include "srkit/homology.hpp"
#include "srkit/ring_props.hpp"

namespace srkit {

/**
 * SRC v1 text format:
 *
 *     n 5
 *     # comment
 *     1 2 4
 *     1 3 5
 *
 * The first non-comment line is `n <int>`, each following line one facet
 * as 1-based vertex indices. `{}` denotes the empty facet. Blank lines and
 * text after `#` are ignored. Multi-document files separate complexes with
 * lines consisting of `---`. All parse functions throw ParseError.
 */
SimplicialComplex parse_src(std::string_view text);
std::vector<SimplicialComplex> parse_src_documents(std::string_view text);
std::string to_src(const SimplicialComplex& complex);
std::string to_src_documents(std::span<const SimplicialComplex> complexes);

/// JSON mirror: {"n": int, "facets": [[int, ...], ...]}.
SimplicialComplex parse_json_complex(std::string_view text);
nlohmann::json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const nlohmann::json& value);

/// JSON when the first non-blank character is '{', SRC v1 otherwise.
SimplicialComplex parse_complex(std::string_view text);

/// "1 2 4; 1 3 5" (facets separated by ';'). n defaults to the largest vertex.
SimplicialComplex parse_inline_facets(std::string_view text, std::optional<int> n = std::nullopt);

nlohmann::json invariants_to_json(const InvariantSummary& summary);
nlohmann::json homology_to_json(const HomologyProfile& profile);
nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json ring_status_to_json(const RingStatus& status);

/// Degree as text: "inf" for kInfiniteDegree.
std::string degree_text(int degree);

} // namespace srkit

#endif
