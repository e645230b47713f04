#include "tourcolor/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tourcolor/errors.hpp"

namespace tourcolor {

namespace {

using Kind = ParseError::Kind;

std::string pair_bits(std::size_t n, auto &&bit)
{
    std::string s;
    s.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            s.push_back(bit(i, j) ? '1' : '0');
    return s;
}

std::string_view trim_cr(std::string_view line)
{
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    return line;
}

struct PairText {
    std::size_t n = 0;
    std::string_view bits;
};

PairText split_pair_text(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = trim_cr(text.substr(pos, end - pos));
        if (!line.starts_with('#'))
            lines.push_back(line);
        pos = end + 1;
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();

    if (lines.empty() || lines.front().empty())
        throw ParseError(Kind::MalformedHeader, "missing vertex count");
    PairText out;
    auto header = lines.front();
    auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), out.n);
    if (ec != std::errc{} || ptr != header.data() + header.size())
        throw ParseError(Kind::MalformedHeader, "vertex count is not a decimal integer: '" + std::string(header) + "'");
    if (lines.size() > 2)
        throw ParseError(Kind::TrailingData, "unexpected content after the pair line");
    if (lines.size() == 2)
        out.bits = lines[1];

    const auto expected = out.n * (out.n - (out.n > 0 ? 1 : 0)) / 2;
    for (char c : out.bits)
        if (c != '0' && c != '1')
            throw ParseError(Kind::NonBinaryCharacter, std::string("pair line contains '") + c + "'");
    if (out.bits.size() != expected)
        throw ParseError(Kind::LengthMismatch, "expected " + std::to_string(expected) + " pair characters, got " +
                                                   std::to_string(out.bits.size()));
    return out;
}

} // namespace

std::string serialize(const Tournament &t)
{
    return std::to_string(t.size()) + "\n" +
           pair_bits(t.size(), [&](std::size_t i, std::size_t j) { return t.arc(i, j); }) + "\n";
}

Tournament parse_tournament(std::string_view text)
{
    auto pt = split_pair_text(text);
    Tournament t(pt.n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < pt.n; ++i)
        for (std::size_t j = i + 1; j < pt.n; ++j)
            if (pt.bits[k++] == '0')
                t.orient(j, i);
    return t;
}

std::string serialize(const Graph &g)
{
    return std::to_string(g.size()) + "\n" +
           pair_bits(g.size(), [&](std::size_t i, std::size_t j) { return g.has_edge(i, j); }) + "\n";
}

Graph parse_graph(std::string_view text)
{
    auto pt = split_pair_text(text);
    Graph g(pt.n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < pt.n; ++i)
        for (std::size_t j = i + 1; j < pt.n; ++j)
            if (pt.bits[k++] == '1')
                g.add_edge(i, j);
    return g;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace tourcolor
