#pragma once

#include <string>
#include <utility>
#include <vector>

#include "duality/backend.hpp"

namespace fixture {

using duality::FiniteLattice;

inline FiniteLattice lattice(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> pairs)
{
    return FiniteLattice(duality::validate_poset(std::move(labels), pairs));
}

// bot < x, y < top
inline FiniteLattice bool4()
{
    return lattice({"bot", "x", "y", "top"}, {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
}

inline FiniteLattice chain(std::size_t n) { return FiniteLattice(duality::chain_poset(n)); }

inline duality::LatticeBackend bool4_backend() { return duality::LatticeBackend(bool4()); }

} // namespace fixture
