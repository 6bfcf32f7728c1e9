#ifndef LSK_PRINTER_HPP
#define LSK_PRINTER_HPP

#include <string>

#include "lsk/element.hpp"

namespace lsk {

// Deterministic human-readable form: terms in canonical order (length, then
// lex), each as "<coeff> <word>" with the reduced rational coefficient
// always written, the word as juxtaposed generator names, terms joined by
// " + " / " - " with the sign folded into the separator. The zero element
// prints as "0" and the empty word as the bare coefficient. Injective on
// elements of a fixed context; not meant to parse back (the JSON form is the
// round-trip format).
std::string print_canonical(const Element& e);

}  // namespace lsk

#endif  // LSK_PRINTER_HPP
