#ifndef CLASSFORGE_RESIDUE_SYMBOL_HPP
#define CLASSFORGE_RESIDUE_SYMBOL_HPP

#include <string>

#include "classforge/numeric.hpp"

namespace classforge {

enum class Symbol { residue, nonresidue };

std::string to_string(Symbol s);

/// p-th power residue symbol (a | ell)_p for primes ell and p.  When p | ell-1
/// this is Residue iff a^((ell-1)/p) = 1 (mod ell); when p does not divide
/// ell-1 the p-th power map is a bijection on the units, so every a is a
/// residue.  Throws shared_factor when ell | a.
Symbol power_residue_symbol(const Integer& a, const Integer& ell, const Integer& p);

} // namespace classforge

#endif
