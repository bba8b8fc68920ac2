#include "toric/io.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace toric {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> tokens(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

Integer parse_integer(const std::string& t, std::size_t line_no) {
    Integer x;
    std::string s = (!t.empty() && t[0] == '+') ? t.substr(1) : t;
    if (s.empty() || x.set_str(s, 10) != 0)
        fail(ErrorKind::input, "line " + std::to_string(line_no) + ": '" + t + "' is not an integer");
    return x;
}

long parse_long(std::string_view s, std::string_view context) {
    s = trim(s);
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        fail(ErrorKind::input, std::string(context) + ": '" + std::string(s) + "' is not an integer");
    return v;
}

ExpVector parse_monomial(std::string_view text, const std::vector<std::string>& labels) {
    ExpVector m(labels.size(), 0);
    text = trim(text);
    if (text == "1") return m;
    if (text.empty()) fail(ErrorKind::input, "empty monomial");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t star = text.find('*', start);
        std::string_view factor = trim(text.substr(start, star == std::string_view::npos ? text.npos : star - start));
        long exponent = 1;
        std::size_t caret = factor.find('^');
        std::string_view name = trim(factor.substr(0, caret));
        if (caret != std::string_view::npos) exponent = parse_long(factor.substr(caret + 1), "exponent");
        if (exponent < 0) fail(ErrorKind::input, "negative exponent in '" + std::string(factor) + "'");
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) fail(ErrorKind::input, "unknown variable '" + std::string(name) + "'");
        m[static_cast<std::size_t>(it - labels.begin())] += static_cast<Exponent>(exponent);
        if (star == std::string_view::npos) break;
        start = star + 1;
    }
    return m;
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::istringstream in{std::string(text)};
        std::size_t no = 0;
        for (std::string line; std::getline(in, line);) {
            ++no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (!trim(line).empty()) lines.emplace_back(no, line);
        }
    }
    if (lines.empty()) fail(ErrorKind::input, "empty matrix file");
    auto header = tokens(lines[0].second);
    if (header.size() != 2) fail(ErrorKind::input, "line " + std::to_string(lines[0].first) + ": expected \"d n\"");
    const long d = parse_long(header[0], "row count");
    const long n = parse_long(header[1], "column count");
    if (d <= 0 || n <= 0) fail(ErrorKind::input, "d and n must be positive");
    if (lines.size() < static_cast<std::size_t>(d) + 1)
        fail(ErrorKind::input, "expected " + std::to_string(d) + " matrix rows");
    IntMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
    for (long i = 0; i < d; ++i) {
        const auto& [no, line] = lines[static_cast<std::size_t>(i) + 1];
        auto row = tokens(line);
        if (row.size() != static_cast<std::size_t>(n))
            fail(ErrorKind::input, "line " + std::to_string(no) + ": expected " + std::to_string(n) + " entries, got " +
                                       std::to_string(row.size()));
        for (long j = 0; j < n; ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_integer(row[static_cast<std::size_t>(j)], no);
    }
    std::vector<std::string> labels;
    std::size_t next = static_cast<std::size_t>(d) + 1;
    if (next < lines.size()) {
        const auto& [no, line] = lines[next];
        std::string_view body = trim(line);
        if (body.substr(0, 7) != "labels:")
            fail(ErrorKind::input, "line " + std::to_string(no) + ": unexpected content after the matrix");
        labels = tokens(body.substr(7));
        if (labels.size() != static_cast<std::size_t>(n))
            fail(ErrorKind::input, "line " + std::to_string(no) + ": expected " + std::to_string(n) + " labels");
        if (next + 1 < lines.size())
            fail(ErrorKind::input, "line " + std::to_string(lines[next + 1].first) + ": trailing content");
    }
    return Configuration(std::move(m), std::move(labels));
}

Configuration read_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::input, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_configuration(buf.str());
}

std::string format_configuration(const Configuration& a) {
    std::ostringstream out;
    out << a.dim() << ' ' << a.size() << '\n';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out << (j ? " " : "") << a.matrix()(i, j);
        out << '\n';
    }
    out << "labels:";
    for (const auto& l : a.labels()) out << ' ' << l;
    out << '\n';
    return out.str();
}

LatticeBinomial parse_binomial(std::string_view text, const std::vector<std::string>& labels) {
    // The separating minus is the one surrounded by spaces or the only one.
    std::size_t minus = text.find(" - ");
    if (minus == std::string_view::npos) minus = text.find('-');
    if (minus == std::string_view::npos) fail(ErrorKind::input, "binomial needs two sides: '" + std::string(text) + "'");
    std::size_t skip = text.substr(minus, 3) == " - " ? 3 : 1;
    ExpVector head = parse_monomial(text.substr(0, minus), labels);
    ExpVector tail = parse_monomial(text.substr(minus + skip), labels);
    ExpVector u(labels.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = head[i] - tail[i];
    return LatticeBinomial(std::move(u));
}

std::vector<long> parse_int_list(std::string_view text) {
    std::vector<long> out;
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    for (const auto& t : tokens(s)) out.push_back(parse_long(t, "integer list"));
    return out;
}

}  // namespace toric
