// Small tour of the library: Pop on a few lattices and the closed forms they meet.

#include <iostream>

#include "poplat/dyck.hpp"
#include "poplat/formulas.hpp"
#include "poplat/tamari.hpp"
#include "poplat/weak.hpp"

int main() {
  using namespace poplat;

  const auto x = parse_signed("5,1,7,6,3,2,8,4");
  std::cout << "Pop in Weak(B_4): " << to_text(x) << " -> " << to_text(pop_direct(x)) << "\n";

  const auto t = parse_permutation("4,5,3,2,7,8,6,1");
  std::cout << "Pop in Tam(A_7):  " << to_text(t) << " -> " << to_text(pop_tam(t)) << "\n";
  std::cout << "a preimage of " << to_text(pop_tam(t)) << ": " << to_text(preimage_end1(pop_tam(t))) << "\n";

  for (int n = 1; n <= 4; ++n) {
    const auto l = tam_b_lattice(n);
    std::cout << "Pop(Tam(B_" << n << "); q) = " << l.pop_polynomial().to_string()
              << "   closed form " << tam_b_polynomial(n).to_string() << "\n";
  }

  const auto j = build_j_a(5);
  std::cout << "Pop(J(A_4); q) = " << j.pop_polynomial().to_string() << "   closed form "
            << jayan_polynomial(3).to_string() << "\n";
  const auto p = parse_path("rrfrrfffrf");
  std::cout << "Pop-up of " << to_text(p) << " is " << to_text(pop_up_path(p)) << "\n";
}
