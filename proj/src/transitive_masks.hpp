#pragma once

// Word-sized local views of small vertex sets (at most 64 members),
// shared by the exact solvers.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourcolor/tournament.hpp"

namespace tourcolor::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(unsigned i) { return Mask{1} << i; }

/// out[i] has bit j set iff members[i] -> members[j].
inline std::vector<Mask> local_out_masks(const Tournament &t, const std::vector<std::size_t> &members)
{
    std::vector<Mask> out(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && t.arc(members[i], members[j]))
                out[i] |= bit(static_cast<unsigned>(j));
    return out;
}

class LocalMasks {
public:
    explicit LocalMasks(std::vector<Mask> out) : out_(std::move(out)) {}

    std::size_t size() const { return out_.size(); }
    Mask out(unsigned v) const { return out_[v]; }

    /// Distinct in-set out-degrees.
    bool transitive(Mask s) const
    {
        Mask seen = 0;
        for (Mask r = s; r != 0; r &= r - 1) {
            const auto x = static_cast<unsigned>(std::countr_zero(r));
            const Mask d = bit(static_cast<unsigned>(std::popcount(out_[x] & s)));
            if (seen & d)
                return false;
            seen |= d;
        }
        return true;
    }

    /// For transitive s: s u {v} is transitive iff nothing v beats in s beats
    /// something in s that beats v.
    bool extends(Mask s, unsigned v) const
    {
        s &= ~bit(v);
        const Mask beaten = out_[v] & s;
        const Mask beating = s & ~beaten;
        for (Mask r = beaten; r != 0; r &= r - 1)
            if (out_[static_cast<unsigned>(std::countr_zero(r))] & beating)
                return false;
        return true;
    }

    std::size_t max_transitive_size() const
    {
        std::size_t best = 0;
        const Mask all = size() == 64 ? ~Mask{0} : bit(static_cast<unsigned>(size())) - 1;
        grow(0, all, best);
        return best;
    }

private:
    void grow(Mask cur, Mask candidates, std::size_t &best) const
    {
        const auto have = static_cast<std::size_t>(std::popcount(cur));
        if (have + static_cast<std::size_t>(std::popcount(candidates)) <= best)
            return;
        if (candidates == 0) {
            best = have;
            return;
        }
        const auto u = static_cast<unsigned>(std::countr_zero(candidates));
        const Mask rest = candidates & ~bit(u);
        if (extends(cur, u)) {
            // Only candidates that still extend cur u {u} remain useful.
            Mask keep = 0;
            const Mask next = cur | bit(u);
            for (Mask r = rest; r != 0; r &= r - 1) {
                const auto w = static_cast<unsigned>(std::countr_zero(r));
                if (extends(next, w))
                    keep |= bit(w);
            }
            grow(next, keep, best);
        }
        grow(cur, rest, best);
    }

    std::vector<Mask> out_;
};

} // namespace tourcolor::detail
