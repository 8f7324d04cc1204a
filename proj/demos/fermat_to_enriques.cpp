// Points on x^4+y^4=z^4+w^4 from the lambda = 3/2 fiber, pushed to the
// quintic and classified by which double cover they lift to.
#include <iostream>

#include "arithsurf/arithsurf.hpp"

using namespace arithsurf;

int main() {
  const Rational lambda = make_rational(3, 2);
  for (const auto& p : fermat::generate_lambda_points(lambda, 4)) {
    auto e = enriques::push_from_F(p);
    auto lift = enriques::lift_check(e);
    std::cout << p.to_string() << "\n  -> " << e.to_string() << "  " << enriques::to_string(lift.cover);
    if (lift.witness) std::cout << " (witness " << lift.witness->get_str() << ")";
    std::cout << "\n";
  }
}
