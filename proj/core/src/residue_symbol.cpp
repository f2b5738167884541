#include "classforge/residue_symbol.hpp"

#include "classforge/modular.hpp"

namespace classforge {

std::string to_string(Symbol s) {
    return s == Symbol::residue ? "residue" : "nonresidue";
}

Symbol power_residue_symbol(const Integer& a, const Integer& ell, const Integer& p) {
    Integer red = floor_mod(a, ell);
    if (sign(red) == 0)
        throw shared_factor("power_residue_symbol: " + to_string(ell) + " divides " + to_string(a));
    Integer order = ell - 1;
    if (!mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t()))
        return Symbol::residue;
    Integer e = divexact(order, p);
    return mod_pow(red, e, ell).value == 1 ? Symbol::residue : Symbol::nonresidue;
}

} // namespace classforge
