#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bookcoh/multivector.hpp"

namespace bookcoh {

/// Parse failure with the 0-based character position of the offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

/// Parses the multivector grammar
///
///   expression := ['-'] term (('+'|'-') term)*
///   term       := [rational '*'] [monomial '*'] generators
///   rational   := INT ['/' INT]
///   monomial   := factor ('*' factor)*
///   factor     := ('t' | 'u'INT) ['^' INT]
///   generators := '1' | gen ('^' gen)*
///   gen        := 'dt' | 'du'INT
///
/// The token after '^' disambiguates power (integer) from wedge (generator).
/// Whitespace is insignificant.  All terms must share one degree; generator
/// indices must be < n.  The literal '0' denotes the zero multivector.
PolyMultivector parse_multivector(std::string_view text, int n);

/// Canonical text form: dt-terms first, then J lexicographic, then monomial
/// lexicographic; reduced fractions; deterministic.  parse ∘ format = id.
std::string format_multivector(const PolyMultivector& mu);

}  // namespace bookcoh
