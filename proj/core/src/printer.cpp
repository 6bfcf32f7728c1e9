#include "lsk/printer.hpp"

namespace lsk {

std::string print_canonical(const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [word, coefficient] : e.terms()) {
        Rational c = coefficient;
        if (out.empty()) {
            out += to_string(c);
        } else {
            if (c < 0) {
                out += " - ";
                c = Rational(-c);
            } else {
                out += " + ";
            }
            out += to_string(c);
        }
        if (!word.empty()) {
            out += ' ';
            out += e.word_text(word);
        }
    }
    return out;
}

}  // namespace lsk
