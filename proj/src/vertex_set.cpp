#include "tourcolor/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tourcolor {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (auto tail = universe % 64; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<std::size_t> members)
{
    return of(universe, std::span<const std::size_t>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const std::size_t> members)
{
    VertexSet s(universe);
    for (auto v : members)
        s.insert(v);
    return s;
}

std::size_t VertexSet::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::check_member(std::size_t v) const
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_) + ")");
}

void VertexSet::check_same_universe(const VertexSet &other) const
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::contains(std::size_t v) const
{
    if (v >= universe_)
        return false;
    return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(std::size_t v)
{
    check_member(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(std::size_t v)
{
    check_member(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::next(std::size_t from) const
{
    if (from >= universe_)
        return npos;
    std::size_t wi = from / 64;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
    while (true) {
        if (w != 0)
            return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == words_.size())
            return npos;
        w = words_[wi];
    }
}

std::vector<std::size_t> VertexSet::to_vector() const
{
    std::vector<std::size_t> out;
    out.reserve(count());
    for (auto v : *this)
        out.push_back(v);
    return out;
}

bool VertexSet::is_subset_of(const VertexSet &other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet &other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

VertexSet VertexSet::complement() const
{
    auto c = full(universe_);
    return c -= *this;
}

VertexSet &VertexSet::operator|=(const VertexSet &other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::lex_less(const VertexSet &other) const
{
    auto a = to_vector();
    auto b = other.to_vector();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace tourcolor
