#pragma once

#include <string>
#include <utility>
#include <vector>

#include "duality/engine.hpp"
#include "json.hpp"

namespace duality {

using Json = nlohmann::ordered_json;

Json set_json(const OrderBackend& bk, const ElemSet& s);

// {"verified_bound": n, "exhaustive": b} | {"refuted_witness": x} |
// {"malformed": [a, b]} | {"unchecked": true}
Json verdict_json(const OrderBackend& bk, const Verdict& v);

// {"left": [...], "right": [...], "status": {...}}
Json duality_json(const OrderBackend& bk, const DualitySpec& d);

// [{"members": [...], "complement": [...], "r": x | null}, ...]
Json transversals_json(const OrderBackend& bk, const std::vector<Transversal>& ts);

Json pairs_json(const OrderBackend& bk, const std::vector<std::pair<Elem, Elem>>& ps);

// "Verified(4)", "Verified(exhaustive)", "Refuted(witness x)", ...
std::string verdict_text(const OrderBackend& bk, const Verdict& v);

std::string set_text(const OrderBackend& bk, const ElemSet& s);

} // namespace duality
