// Walk through the period-2 line: two banal points whose sum is not banal,
// then order, socle word and lift of a banal multisegment on period 5.
#include <banal/banal.hpp>

#include <iostream>

int main() {
    using namespace banal;
    auto registry = LineRegistry::parse(
        "line e2 e=2 deg=1 dual=e2\n"
        "line e5 e=5 deg=1 dual=e5\n"
        "line einf e=inf deg=1 dual=einf\n");

    auto x = parse_multisegment(registry, "[0,0]@e2");
    auto y = parse_multisegment(registry, "[1,1]@e2");
    std::cout << to_string(x) << " banal: " << is_banal(x) << "\n"
              << to_string(y) << " banal: " << is_banal(y) << "\n"
              << to_string(x + y) << " banal: " << is_banal(x + y) << "\n";
    try {
        ranged_form(x + y);
    } catch (const Error& e) {
        std::cout << "ranged form: " << name(e.code()) << "\n";
    }

    auto m = parse_multisegment(registry, "[3,4]@e5 + [4,5]@e5");
    std::cout << "\n" << to_string(m) << "\n"
              << "ordered form: " << to_string(ordered_segments(m)) << "\n"
              << "socle word:   " << to_string(socle_word(m, Convention::Z)) << "\n"
              << "lift:         " << to_string(lift(m, registry.at("einf"))) << "\n";
}
