#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace tourcolor {

/// A subset of the vertices 0..universe-1 of some host structure, stored as
/// a packed bit vector. Binary set operations require equal universes.
class VertexSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t *;
        using reference = std::size_t;

        const_iterator() = default;
        const_iterator(const VertexSet *set, std::size_t pos) : set_(set), pos_(pos) {}

        std::size_t operator*() const { return pos_; }
        const_iterator &operator++()
        {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator &other) const { return pos_ == other.pos_; }

    private:
        const VertexSet *set_ = nullptr;
        std::size_t pos_ = npos;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static VertexSet full(std::size_t universe);
    static VertexSet of(std::size_t universe, std::initializer_list<std::size_t> members);
    static VertexSet of(std::size_t universe, std::span<const std::size_t> members);

    std::size_t universe() const { return universe_; }
    std::size_t count() const;
    bool empty() const;

    bool contains(std::size_t v) const;
    void insert(std::size_t v);
    void erase(std::size_t v);

    /// Lowest member at or above `from`, or npos.
    std::size_t next(std::size_t from) const;
    std::size_t lowest() const { return next(0); }

    const_iterator begin() const { return {this, lowest()}; }
    const_iterator end() const { return {this, npos}; }

    std::vector<std::size_t> to_vector() const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool is_subset_of(const VertexSet &other) const;
    bool intersects(const VertexSet &other) const;

    VertexSet complement() const;

    VertexSet &operator|=(const VertexSet &other);
    VertexSet &operator&=(const VertexSet &other);
    /// Set difference.
    VertexSet &operator-=(const VertexSet &other);

    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    bool operator==(const VertexSet &other) const = default;

    /// Orders by sorted member lists, lexicographically.
    bool lex_less(const VertexSet &other) const;

private:
    void check_same_universe(const VertexSet &other) const;
    void check_member(std::size_t v) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tourcolor
