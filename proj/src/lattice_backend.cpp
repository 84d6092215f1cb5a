#include <numeric>

#include "duality/backend.hpp"

namespace duality {

LatticeBackend::LatticeBackend(FiniteLattice l)
    : lattice_(std::move(l)), connected_(connected_elements(lattice_)), universe_(lattice_.size())
{
    std::iota(universe_.begin(), universe_.end(), Elem{0});
}

ElemSet LatticeBackend::components(Elem a) const { return duality::components(lattice_, connected_, a); }

} // namespace duality
