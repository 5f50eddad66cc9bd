#pragma once

// Deterministic serialization: element literals, system descriptors, and
// JSON / DOT / table renderings of intervals, coset partitions, quotient
// graphs, and check reports. Identical inputs yield byte-identical output.

#include <coxlab/lab.hpp>

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace coxlab::io {

using nlohmann::json;

/// One-line digits for small type A systems, "e" or a generator word
/// otherwise: "3412", "e", "2 1 3 2".
inline std::string element_str(const CoxeterSystem& sys, const Element& e) {
    if (sys.is_type_a() && sys.points() <= 9) {
        std::string out;
        for (std::int64_t v : e.data()) out += char('0' + v);
        return out;
    }
    if (e.length() == 0) return "e";
    std::string out;
    for (int s : reduced_word(sys, e)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s);
    }
    return out;
}

inline Element parse_element(const CoxeterSystem& sys, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty element literal");
    if (text == "e") return sys.identity();

    bool digits_only = true;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits_only = false;

    if (digits_only && sys.is_type_a() && int(text.size()) == sys.points()) {
        std::vector<int> line;
        line.reserve(text.size());
        for (char c : text) line.push_back(c - '0');
        return sys.from_one_line(line);
    }
    if (digits_only && !sys.is_type_a() && text.find(' ') == std::string::npos &&
        text.size() > 1)
        throw std::invalid_argument("one-line literal '" + text +
                                    "' requires a type A system; use a generator word");

    Word word;
    std::istringstream in(text);
    int letter;
    while (in >> letter) word.push_back(letter);
    if (!in.eof())
        throw std::invalid_argument("cannot parse element literal '" + text + "'");
    if (word.empty()) throw std::invalid_argument("empty element literal");
    return sys.evaluate(word);
}

inline json system_to_json(const CoxeterSystem& sys) {
    if (sys.is_type_a()) return json{{"type", "A"}, {"rank", sys.rank()}};
    json rows = json::array();
    for (int i = 1; i <= sys.rank(); ++i) {
        json row = json::array();
        for (int j = 1; j <= sys.rank(); ++j) row.push_back(sys.matrix().at(i, j));
        rows.push_back(row);
    }
    return json{{"coxeter_matrix", rows}};
}

inline CoxeterSystem system_from_json(const json& j) {
    if (j.contains("coxeter_matrix")) {
        const auto& rows = j.at("coxeter_matrix");
        CoxeterMatrix m;
        m.rank = int(rows.size());
        for (const auto& row : rows) {
            if (int(row.size()) != m.rank)
                throw std::invalid_argument("coxeter matrix must be square");
            for (const auto& v : row) m.entries.push_back(v.get<int>());
        }
        return CoxeterSystem::from_matrix(m);
    }
    if (j.contains("type")) {
        if (j.at("type").get<std::string>() != "A")
            throw std::invalid_argument("unsupported system type '" +
                                        j.at("type").get<std::string>() + "'");
        return CoxeterSystem::type_a(j.at("rank").get<int>());
    }
    throw std::invalid_argument("system descriptor needs 'type'/'rank' or 'coxeter_matrix'");
}

// ---- lower intervals ----

inline json interval_to_json(const CoxeterSystem& sys, const LowerInterval& interval) {
    json members = json::array();
    for (const auto& m : interval.members()) members.push_back(element_str(sys, m));

    json levels = json::array();
    for (const auto& [len, elems] : interval.levels()) {
        json level = json::array();
        for (const auto& m : elems) level.push_back(element_str(sys, m));
        levels.push_back(level);
    }

    json edges = json::array();
    for (const auto& [a, b] : interval.edges())
        edges.push_back(json::array({element_str(sys, interval.members()[std::size_t(a)]),
                                     element_str(sys, interval.members()[std::size_t(b)])}));

    return json{{"v", 1},
                {"system", system_to_json(sys)},
                {"w", element_str(sys, interval.top())},
                {"members", members},
                {"levels", levels},
                {"edges", edges}};
}

struct IntervalData {
    Element w;
    std::vector<Element> members;
    std::vector<std::pair<Element, Element>> edges;
};

inline IntervalData interval_from_json(const CoxeterSystem& sys, const json& j) {
    IntervalData data;
    data.w = parse_element(sys, j.at("w").get<std::string>());
    for (const auto& m : j.at("members"))
        data.members.push_back(parse_element(sys, m.get<std::string>()));
    for (const auto& e : j.at("edges"))
        data.edges.emplace_back(parse_element(sys, e.at(0).get<std::string>()),
                                parse_element(sys, e.at(1).get<std::string>()));
    return data;
}

inline std::string interval_to_dot(const CoxeterSystem& sys, const LowerInterval& interval,
                                   bool hasse_only = false) {
    std::ostringstream out;
    out << "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& [len, elems] : interval.levels()) {
        out << "  { rank=same;";
        for (const auto& m : elems) out << " \"" << element_str(sys, m) << "\";";
        out << " }\n";
    }
    for (const auto& [a, b] : interval.edges()) {
        const auto& u = interval.members()[std::size_t(a)];
        const auto& v = interval.members()[std::size_t(b)];
        if (hasse_only && v.length() - u.length() != 1) continue;
        out << "  \"" << element_str(sys, u) << "\" -> \"" << element_str(sys, v) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

// ---- coset partitions ----

namespace detail {

// Members rendered top-down: length descending, canonical form ascending.
inline std::string member_set_str(const CoxeterSystem& sys, const std::vector<Element>& members) {
    std::vector<Element> ordered = members;
    std::sort(ordered.begin(), ordered.end(), [](const Element& a, const Element& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a.data() < b.data();
    });
    std::string out = "{";
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (i) out += ", ";
        out += element_str(sys, ordered[i]);
    }
    return out + "}";
}

}  // namespace detail

inline json cosets_to_json(const CoxeterSystem& sys, const Element& w,
                           const std::vector<BruhatCoset>& cosets) {
    json rows = json::array();
    for (const auto& c : cosets) {
        json members = json::array();
        for (const auto& m : c.members) members.push_back(element_str(sys, m));
        rows.push_back(json{{"members", members},
                            {"pup", element_str(sys, c.v_max)},
                            {"length", c.length()},
                            {"pdown", element_str(sys, c.v_min)},
                            {"mid", c.mid},
                            {"side", c.side}});
    }
    return json{{"v", 1}, {"system", system_to_json(sys)}, {"w", element_str(sys, w)},
                {"cosets", rows}};
}

struct CosetRow {
    std::vector<Element> members;
    Element pup, pdown;
    int length = 0, mid = 0, side = 0;
};

inline std::vector<CosetRow> cosets_from_json(const CoxeterSystem& sys, const json& j) {
    std::vector<CosetRow> out;
    for (const auto& row : j.at("cosets")) {
        CosetRow r;
        for (const auto& m : row.at("members"))
            r.members.push_back(parse_element(sys, m.get<std::string>()));
        r.pup = parse_element(sys, row.at("pup").get<std::string>());
        r.pdown = parse_element(sys, row.at("pdown").get<std::string>());
        r.length = row.at("length").get<int>();
        r.mid = row.at("mid").get<int>();
        r.side = row.at("side").get<int>();
        out.push_back(std::move(r));
    }
    return out;
}

/// Plain-text partition table, one row per coset:
/// members | P^(C) | l(C) | Pv(C) | mid_w(C) | side_w(C).
inline std::string cosets_to_table(const CoxeterSystem& sys, const Element& w,
                                   const std::vector<BruhatCoset>& cosets) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"C", "P^(C)", "l(C)", "Pv(C)", "mid_w(C)", "side_w(C)"});
    for (const auto& c : cosets)
        rows.push_back({detail::member_set_str(sys, c.members), element_str(sys, c.v_max),
                        std::to_string(c.length()), element_str(sys, c.v_min),
                        std::to_string(c.mid), std::to_string(c.side)});

    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    out << "C(w) for w = " << element_str(sys, w) << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

// ---- quotient intervals ----

inline json quotient_to_json(const CoxeterSystem& sys, const QuotientInterval& q,
                             const QuotientGraphReport& check) {
    json order = json::array();
    for (std::size_t i = 0; i < q.cosets.size(); ++i)
        for (std::size_t j = 0; j < q.cosets.size(); ++j)
            if (i != j && q.leq[i][j]) order.push_back(json::array({int(i), int(j)}));

    json arcs = json::array();
    for (const auto& [a, b] : q.arcs) arcs.push_back(json::array({a, b}));

    json counterexamples = json::array();
    for (const auto& c : check.counterexamples) counterexamples.push_back(c);

    return json{{"v", 1},
                {"system", system_to_json(sys)},
                {"w", element_str(sys, q.w)},
                {"separated", check.separated},
                {"cosets", cosets_to_json(sys, q.w, q.cosets).at("cosets")},
                {"order", order},
                {"arcs", arcs},
                {"checks", json{{"min_edge_implies_arc", check.min_edge_implies_arc},
                                {"arc_implies_min_edge", check.arc_implies_min_edge},
                                {"equivalent", check.equivalent()},
                                {"counterexamples", counterexamples}}}};
}

inline std::string quotient_to_dot(const CoxeterSystem& sys, const QuotientInterval& q) {
    std::ostringstream out;
    out << "digraph quotient {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < q.cosets.size(); ++i) {
        const auto& c = q.cosets[i];
        out << "  c" << i << " [label=\"P^ " << element_str(sys, c.v_max) << "\\nPv "
            << element_str(sys, c.v_min) << "\\nmid " << c.mid << " side " << c.side << "\"];\n";
    }
    for (const auto& [a, b] : q.arcs) out << "  c" << a << " -> c" << b << ";\n";
    out << "}\n";
    return out.str();
}

// ---- reports and polynomials ----

inline json report_to_json(const CheckReport& report) {
    json clauses = json::array();
    for (const auto& c : report.clauses)
        clauses.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return json{{"v", 1},
                {"subject", report.subject},
                {"skipped", report.skipped},
                {"skip_reason", report.skip_reason},
                {"clauses", clauses}};
}

inline json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (long long c : p.coeffs) coeffs.push_back(c);
    return coeffs;
}

}  // namespace coxlab::io
