#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chord_diagram.hpp"
#include "graph.hpp"

namespace f4g {

// Contents of a diagram file: one diagram per component plus free circles.
struct DiagramDocument {
    std::vector<FramedChordDiagram> diagrams;
    int circles = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

inline std::vector<Token> tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

inline bool to_int(std::string_view s, int& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

class LineReader {
public:
    explicit LineReader(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines_.push_back(line);
            start = end + 1;
        }
        // a final newline does not open another line
        if (!text.empty() && text.back() == '\n') lines_.pop_back();
    }

    bool done() const { return next_ >= lines_.size(); }
    int number() const { return static_cast<int>(next_) + 1; }
    std::string_view peek() const { return lines_[next_]; }

    std::string_view take(const char* what) {
        if (done()) throw ParseError(number(), 1, std::string("unexpected end of input, expected ") + what);
        return lines_[next_++];
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t next_ = 0;
};

inline bool is_blank(std::string_view line) { return tokens(line).empty(); }

inline FramedChordDiagram parse_block(LineReader& in) {
    int line = in.number();
    const auto head = tokens(in.take("a block header"));
    int count = -1;
    if (head.size() != 2 || head[0].text != "n" || !to_int(head[1].text, count) || count < 0)
        throw ParseError(line, head.empty() ? 1 : head[0].column, "expected 'n <count>'");

    line = in.number();
    const auto labels = tokens(in.take("a line of chord labels"));
    if (static_cast<int>(labels.size()) != 2 * count)
        throw ParseError(line, 1, "expected " + std::to_string(2 * count) + " chord labels, found " + std::to_string(labels.size()));
    std::vector<int> word;
    std::vector<int> seen(count, 0);
    std::vector<int> order;  // labels by first occurrence, 0-based
    for (const Token& t : labels) {
        int label = 0;
        if (!to_int(t.text, label) || label < 1 || label > count)
            throw ParseError(line, t.column, "chord label '" + std::string(t.text) + "' is not in 1.." + std::to_string(count));
        if (++seen[label - 1] > 2) throw ParseError(line, t.column, "chord label " + std::to_string(label) + " occurs more than twice");
        if (seen[label - 1] == 1) order.push_back(label - 1);
        word.push_back(label - 1);
    }
    for (int c = 0; c < count; ++c)
        if (seen[c] != 2) throw ParseError(line, 1, "chord label " + std::to_string(c + 1) + " occurs " + std::to_string(seen[c]) + " times");

    line = in.number();
    const auto bits = tokens(in.take("a line of framing bits"));
    if (static_cast<int>(bits.size()) != count)
        throw ParseError(line, bits.size() > static_cast<std::size_t>(count) ? bits[count].column : 1,
                         "expected " + std::to_string(count) + " framing bits, found " + std::to_string(bits.size()));
    std::vector<std::uint8_t> framings(count, 0);
    for (int i = 0; i < count; ++i) {
        if (bits[i].text != "0" && bits[i].text != "1")
            throw ParseError(line, bits[i].column, "framing bit '" + std::string(bits[i].text) + "' is not 0 or 1");
        framings[order[i]] = bits[i].text == "1";
    }
    return FramedChordDiagram(std::move(word), std::move(framings));
}

}  // namespace detail

// Grammar: "fcd 1", then blocks of three lines ("n <count>", the chord
// labels 1..count each twice, the framing bits in order of first occurrence
// of each label), then optionally "circles <k>". Trailing blank lines are
// allowed.
inline DiagramDocument parse_diagram(std::string_view text) {
    detail::LineReader in(text);
    DiagramDocument doc;
    const auto magic = detail::tokens(in.take("the header 'fcd 1'"));
    if (magic.size() != 2 || magic[0].text != "fcd" || magic[1].text != "1")
        throw ParseError(1, magic.empty() ? 1 : magic[0].column, "bad magic, expected 'fcd 1'");
    while (!in.done()) {
        const auto t = detail::tokens(in.peek());
        if (t.empty()) break;
        if (t[0].text == "circles") {
            const int line = in.number();
            in.take("circles");
            if (t.size() != 2 || !detail::to_int(t[1].text, doc.circles) || doc.circles < 0)
                throw ParseError(line, t[0].column, "expected 'circles <k>'");
            break;
        }
        doc.diagrams.push_back(detail::parse_block(in));
    }
    while (!in.done()) {
        const int line = in.number();
        const auto rest = in.take("end of input");
        if (!detail::is_blank(rest)) throw ParseError(line, detail::tokens(rest)[0].column, "unexpected content after the last block");
    }
    return doc;
}

// Labels are renumbered by first occurrence, so the framing line reads in
// chord order.
inline std::string serialize(const DiagramDocument& doc) {
    std::ostringstream os;
    os << "fcd 1\n";
    for (const auto& raw : doc.diagrams) {
        const FramedChordDiagram d = normalized(raw);
        os << "n " << d.chord_count() << "\n";
        for (std::size_t i = 0; i < d.word().size(); ++i) os << (i ? " " : "") << d.word()[i] + 1;
        os << "\n";
        for (int c = 0; c < d.chord_count(); ++c) os << (c ? " " : "") << int(d.framing(c));
        os << "\n";
    }
    if (doc.circles > 0) os << "circles " << doc.circles << "\n";
    return os.str();
}

// The described graph: the realizations of the blocks, in order, then the
// free circles. Chord label L of a block becomes vertex offset + L - 1,
// where offset counts the chords of the earlier blocks; an empty block is a
// single circle.
inline FramedFourGraph to_graph(const DiagramDocument& doc) {
    FramedFourGraph g = FramedFourGraph::circles(doc.circles);
    FramedFourGraph blocks;
    for (const auto& d : doc.diagrams) blocks = disjoint_union(blocks, realize(d));
    return disjoint_union(blocks, g);
}

}  // namespace f4g
