#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "urn/scheme.hpp"

namespace urn {

/// Parses a JSON scheme document.
///
///     {
///       "colors":  ["black", "white"],
///       "theta":   1,
///       "initial": [1, 1],
///       "rows": [
///         {"var": "bernoulli(1/2)", "entries": ["X", "theta-X"]},
///         {"table": [{"add": [1, 0], "prob": "1/2"}, {"add": [0, 1], "prob": "1/2"}]}
///       ]
///     }
///
/// A row is one of
///   - `{"table": [{"add": [ints], "prob": r}, ...]}`: explicit joint law;
///   - `{"var": D, "entries": [e_0, ..., e_{k-1}]}`: each e_j an integer or an
///     affine expression in X and theta ("X", "theta-X", "1-X", "2*X+1", "-1");
///   - `{"entries": [ints or expressions without X]}`: deterministic row.
///
/// A distribution D is a string `bernoulli(p)`, `binomial(n,p)`,
/// `uniform(lo,hi)`, `deterministic(v)`, or an object with one of the keys
/// `bernoulli`, `binomial` {n,p}, `uniform` {lo,hi}, `deterministic`,
/// `table` [{value, prob}]. Integer arguments may be the word `theta`.
/// Rationals r, p are JSON integers or strings "num/den" / "0.25".
///
/// Throws ParseError for syntax problems and InvariantError (or a subclass)
/// when the scheme breaks a model invariant.
UrnScheme parse_scheme(std::string_view text);

UrnScheme load_scheme_file(const std::string& path);

/// Canonical JSON rendering with every row in table form.
std::string scheme_to_json(const UrnScheme& scheme);

/// FNV-1a 64 of scheme_to_json, as 16 hex digits.
std::string scheme_hash(const UrnScheme& scheme);

} // namespace urn
