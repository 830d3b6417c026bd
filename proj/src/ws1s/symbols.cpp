/* symbols.cpp -- variable tables and don't-care compressed symbols */

#include "ws1s/symbols.hpp"

#include <sstream>

namespace ws1s {

VarTable::VarTable(std::vector<std::string> names) {
    for (auto& n : names) add(n);
}

std::size_t VarTable::add(const std::string& name) {
    if (contains(name)) throw std::invalid_argument("variable already in table: " + name);
    if (names_.size() >= max_tracks) throw ResourceLimitError("too many variable tracks");
    names_.push_back(name);
    index_.emplace(name, names_.size() - 1);
    return names_.size() - 1;
}

std::size_t VarTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("variable not in table: " + name);
    return it->second;
}

TrackMask VarTable::all_mask() const {
    std::size_t n = names_.size();
    return n == 0 ? 0 : (n >= 64 ? ~TrackMask{0} : ((TrackMask{1} << n) - 1));
}

TrackMask VarTable::mask_of(const std::vector<std::string>& vars) const {
    TrackMask m = 0;
    for (const auto& v : vars) m |= TrackMask{1} << index_of(v);
    return m;
}

VarTable VarTable::without(TrackMask removed) const {
    VarTable out;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!(removed & (TrackMask{1} << i))) out.add(names_[i]);
    return out;
}

Symbol zero_symbol(const VarTable& vars) {
    return Symbol{vars.all_mask(), 0};
}

TrackMask compact_mask(TrackMask m, TrackMask removed) {
    TrackMask out = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < max_tracks; ++i) {
        TrackMask bit = TrackMask{1} << i;
        if (removed & bit) continue;
        if (m & bit) out |= TrackMask{1} << pos;
        ++pos;
    }
    return out;
}

Symbol project_symbol(const Symbol& s, TrackMask block) {
    return Symbol{compact_mask(s.care & ~block, block), compact_mask(s.value & ~block, block)};
}

Symbol expand_symbol(const Symbol& s, const VarTable& from, const VarTable& to) {
    Symbol out;
    for (std::size_t i = 0; i < from.size(); ++i) {
        TrackMask src = TrackMask{1} << i;
        TrackMask dst = TrackMask{1} << to.index_of(from.name(i));
        if (s.care & src) {
            out.care |= dst;
            if (s.value & src) out.value |= dst;
        }
    }
    return out;
}

std::vector<Symbol> inverse_projection(const Symbol& t, const VarTable& reduced,
                                       const VarTable& full,
                                       const std::vector<std::string>& block,
                                       bool compressed) {
    for (const auto& v : block)
        if (reduced.contains(v)) throw std::invalid_argument("block not disjoint from symbol table: " + v);
    Symbol embedded = expand_symbol(t, reduced, full);
    TrackMask block_mask = full.mask_of(block);
    if (compressed) return {embedded};
    std::vector<Symbol> out;
    BlockValues(block_mask).for_each([&](TrackMask v) {
        out.push_back(Symbol{embedded.care | block_mask, embedded.value | v});
    });
    return out;
}

std::vector<Symbol> concretize(const Symbol& s, const VarTable& vars, unsigned cap) {
    TrackMask free = vars.all_mask() & ~s.care;
    unsigned n = static_cast<unsigned>(__builtin_popcountll(free));
    if (n > cap) {
        std::ostringstream os;
        os << "concretize: " << n << " non-cared tracks exceed cap " << cap;
        throw ResourceLimitError(os.str());
    }
    std::vector<Symbol> out;
    out.reserve(std::size_t{1} << n);
    BlockValues(free).for_each([&](TrackMask v) {
        out.push_back(Symbol{vars.all_mask(), s.value | v});
    });
    return out;
}

std::string render_symbol(const Symbol& s, const VarTable& vars) {
    std::string out = "⟨";  // ⟨
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i > 0) out += ",";
        out += vars.name(i);
        out += "↦";  // ↦
        TrackMask bit = TrackMask{1} << i;
        if (!(s.care & bit))
            out += "?";
        else
            out += (s.value & bit) ? "1" : "0";
    }
    out += "⟩";  // ⟩
    return out;
}

}  // namespace ws1s
