// Walk through one Hesse pencil: its Hessian, membership in N, the Jacobian
// rank there, its orbit dimension and the flexes of the Fermat member.
//
//   ./build/samples/hesse_pencil "x^3+y^3+z^3+x*y*z"

#include <hessepencil/suites.hpp>

#include <iostream>

using namespace hesse;

int main(int argc, char** argv) {
    const Rational Q(0);
    const std::string text = argc > 1 ? argv[1] : "x^3+y^3+z^3+x*y*z";
    TernaryCubic<Rational> f;
    try {
        f = parse_cubic(text, Q);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    auto h = hessian_cubic(f);
    std::cout << "f    = " << cubic_str(f) << "\n"
              << "H(f) = " << cubic_str(h) << "\n";
    if (is_cone(f) || projectively_equal(f, h)) {
        std::cout << "f is a cone or a triangle, so <f,H(f)> is not a line\n";
        return 0;
    }
    auto pencil = make_pencil(f, h);
    auto jr = jacobian_rank(n_system(), pencil, Q);
    std::cout << "in N: " << (membership(n_system(), pencil, Q) ? "yes" : "no") << "\n"
              << "Jacobian rank: " << jr.rank << (jr.rank == 36 ? " (smooth point)" : " (singular point)") << "\n"
              << "orbit dimension: " << orbit_dimension(pencil, Q) << "\n"
              << "R(f, H(f), x^3) = " << evaluate_R(f, h, parse_cubic("x^3", Q)).str() << "\n";

    // every Hesse pencil shares the flexes of the Fermat cubic up to a change of frame
    const QOmega like(0);
    auto flexes = fermat_inflection_points(like);
    auto rep = verify_configuration(flexes);
    std::cout << "Fermat flexes:";
    for (const auto& p : flexes) std::cout << " " << p.str();
    std::cout << "\n" << rep.lines.size() << " lines, Hesse configuration: " << (rep.valid ? "yes" : "no") << "\n";
}
