/* symbols.hpp -- variable tables and symbols over sets of second-order variables
 *
 * A symbol assigns 0/1 to every track of a variable table.  Tracks whose
 * value does not matter are left out of the care mask ("don't care"); such
 * a symbol stands for the whole set of total symbols obtained by filling
 * the non-cared tracks arbitrarily.
 */

#ifndef WS1S_SYMBOLS_HPP
#define WS1S_SYMBOLS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ws1s {

using TrackMask = std::uint64_t;

inline constexpr std::size_t max_tracks = 64;

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense, ordered mapping of variable names to track indices.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    /// Adds a new variable; the name must not be present yet.
    std::size_t add(const std::string& name);
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    std::size_t index_of(const std::string& name) const;
    const std::string& name(std::size_t track) const { return names_.at(track); }
    const std::vector<std::string>& names() const { return names_; }

    TrackMask all_mask() const;
    TrackMask mask_of(const std::vector<std::string>& vars) const;

    /// Table with the given tracks removed; remaining tracks are re-indexed
    /// in order.
    VarTable without(TrackMask removed) const;

    bool operator==(const VarTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Partial assignment of tracks to {0,1}.  Bits of `value` outside `care`
/// are kept zero.
struct Symbol {
    TrackMask care = 0;
    TrackMask value = 0;

    bool operator==(const Symbol& other) const = default;

    /// True iff the two symbols denote at least one common total symbol,
    /// i.e. they agree on all mutually cared tracks.
    bool compatible(const Symbol& other) const {
        return ((value ^ other.value) & care & other.care) == 0;
    }

    /// True iff every total symbol denoted by `other` is denoted by this.
    bool covers(const Symbol& other) const {
        return (care & ~other.care) == 0 && ((value ^ other.value) & care) == 0;
    }
};

struct SymbolHash {
    std::size_t operator()(const Symbol& s) const {
        std::size_t h = std::hash<TrackMask>()(s.care);
        return h ^ (std::hash<TrackMask>()(s.value) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

/// The symbol mapping every variable of the table to 0.
Symbol zero_symbol(const VarTable& vars);

/// Removes the given tracks and re-indexes the remaining ones; the result
/// is a symbol over `VarTable::without(block)`.
Symbol project_symbol(const Symbol& s, TrackMask block);

/// Embeds a symbol over `from` into the larger table `to`; tracks new in
/// `to` become don't-care.  Every variable of `from` must appear in `to`.
Symbol expand_symbol(const Symbol& s, const VarTable& from, const VarTable& to);

/// All symbols over the full table whose projection by `block` equals `t`
/// (`t` is over the reduced table).  With `compressed` the set is returned
/// as a single symbol with the block tracks non-cared.
std::vector<Symbol> inverse_projection(const Symbol& t, const VarTable& reduced,
                                       const VarTable& full,
                                       const std::vector<std::string>& block,
                                       bool compressed = false);

/// All total symbols covered by `s`.  Throws ResourceLimitError if the
/// number of non-cared tracks exceeds `cap`.
std::vector<Symbol> concretize(const Symbol& s, const VarTable& vars, unsigned cap = 20);

/// Rendering used in traces and fixtures, e.g. "⟨X1↦0,X2↦?⟩".
std::string render_symbol(const Symbol& s, const VarTable& vars);

/// Packs the bits of `m` that fall outside `removed` towards the low end,
/// preserving order (projection re-indexing).
TrackMask compact_mask(TrackMask m, TrackMask removed);

/// Enumerates all assignments of the tracks in `block`, ascending.
class BlockValues {
public:
    explicit BlockValues(TrackMask block) : block_(block) {}

    template <typename Fn>
    void for_each(Fn&& fn) const {
        TrackMask v = 0;
        while (true) {
            fn(v);
            if (v == block_) break;
            v = (v - block_) & block_;  // next subset of block_
        }
    }

private:
    TrackMask block_;
};

}  // namespace ws1s

#endif
