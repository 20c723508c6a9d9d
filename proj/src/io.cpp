#include "listcol/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "listcol/errors.hpp"

namespace listcol {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int to_int(const std::string& s, int line_no) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line_no);
    }
}

} // namespace

Instance parse_instance(const std::string& text) {
    // Lines may appear in any order; find the header first, then process the
    // rest (line numbers in errors refer to the original document).
    std::vector<std::pair<int, std::vector<std::string>>> body;
    bool have_header = false;
    int n = 0, m = 0, k = 0;
    {
        std::istringstream is(text);
        std::string line;
        int line_no = 0;
        while (std::getline(is, line)) {
            ++line_no;
            auto tok = tokens(line);
            if (tok.empty() || tok[0][0] == '#') continue;
            if (tok[0] == "n") {
                if (have_header) throw ParseError("duplicate header", line_no);
                if (tok.size() != 6 || tok[2] != "m" || tok[4] != "k")
                    throw ParseError(
                        "header must be 'n <count> m <count> k <palette-or-0>'", line_no);
                n = to_int(tok[1], line_no);
                m = to_int(tok[3], line_no);
                k = to_int(tok[5], line_no);
                if (n < 0 || m < 0 || k < 0)
                    throw ParseError("negative header field", line_no);
                have_header = true;
            } else {
                body.push_back({line_no, std::move(tok)});
            }
        }
    }
    if (!have_header) throw ParseError("missing header", 0);

    std::vector<Edge> edges;
    std::map<int, ColourList> lists;
    std::map<int, int> precolours;

    for (const auto& [line_no, tok] : body) {
        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError("edge line must be 'e <u> <v>'", line_no);
            int u = to_int(tok[1], line_no), v = to_int(tok[2], line_no);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("edge endpoint out of range", line_no);
            if (u == v) throw ParseError("self-loop", line_no);
            edges.push_back({u, v});
        } else if (tok[0] == "l") {
            if (tok.size() < 4 || tok[2] != ":")
                throw ParseError("list line must be 'l <v> : <c1> <c2> ...'", line_no);
            int v = to_int(tok[1], line_no);
            if (v < 0 || v >= n) throw ParseError("list vertex out of range", line_no);
            if (lists.count(v)) throw ParseError("duplicate list line for vertex", line_no);
            ColourList l;
            for (std::size_t i = 3; i < tok.size(); ++i) {
                int c = to_int(tok[i], line_no);
                if (c < 0) throw ParseError("negative colour", line_no);
                l.push_back(c);
            }
            lists[v] = std::move(l);
        } else if (tok[0] == "p") {
            if (tok.size() != 4 || tok[2] != "=")
                throw ParseError("precolour line must be 'p <v> = <c>'", line_no);
            int v = to_int(tok[1], line_no), c = to_int(tok[3], line_no);
            if (v < 0 || v >= n) throw ParseError("precolour vertex out of range", line_no);
            if (precolours.count(v))
                throw ParseError("duplicate precolour line for vertex", line_no);
            precolours[v] = c;
        } else {
            throw ParseError("unknown line kind '" + tok[0] + "'", line_no);
        }
    }
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header edge count disagrees with the number of 'e' lines", 0);
    if (!precolours.empty() && k == 0)
        throw ParseError("precolour lines require a positive palette k", 0);

    std::vector<ColourList> full(n);
    for (int v = 0; v < n; ++v) {
        auto it = lists.find(v);
        if (it != lists.end()) {
            full[v] = it->second;
        } else if (k > 0) {
            for (int c = 1; c <= k; ++c) full[v].push_back(c);
        } else {
            throw ParseError("vertex " + std::to_string(v) + " has no list and k = 0", 0);
        }
    }

    Graph g(n, std::move(edges));
    ListAssignment la(std::move(full));
    if (precolours.empty()) return Instance(std::move(g), std::move(la));

    std::vector<int> pre(n, -1);
    for (auto [v, c] : precolours) pre[v] = c;
    return Instance(std::move(g), std::move(la), Precolouring(std::move(pre), k));
}

std::string write_instance(const Instance& inst) {
    std::ostringstream os;
    const Graph& g = inst.graph();
    int k = inst.precolouring() ? inst.precolouring()->palette() : 0;
    os << "n " << g.vertex_count() << " m " << g.edge_count() << " k " << k << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "l " << v << " :";
        for (int c : inst.lists().list(v)) os << " " << c;
        os << "\n";
    }
    if (inst.precolouring())
        for (int v = 0; v < g.vertex_count(); ++v)
            if (inst.precolouring()->assigned(v))
                os << "p " << v << " = " << inst.precolouring()->colour(v) << "\n";
    return os.str();
}

// ---- certificates ----

std::string write_certificate(const ReductionCertificate& cert) {
    std::ostringstream os;
    os << "certificate " << cert.construction << "\n";
    for (const auto& [k, v] : cert.params) os << "param " << k << " " << v << "\n";
    os << "digest " << std::hex << cert.seed_digest << std::dec << "\n";
    for (const auto& n : cert.notes) os << "note " << n << "\n";
    for (const auto& c : cert.claims) {
        switch (c.kind) {
        case Claim::Kind::list_regular:
            os << "claim list-regular " << c.value << "\n";
            break;
        case Claim::Kind::list_sizes_in: {
            os << "claim list-sizes-in";
            for (int s : c.values) os << " " << s;
            os << "\n";
            break;
        }
        case Claim::Kind::girth_at_least:
            os << "claim girth-at-least " << c.value << "\n";
            break;
        case Claim::Kind::max_degree_at_most:
            os << "claim max-degree-at-most " << c.value << "\n";
            break;
        case Claim::Kind::subgraph_absent:
            os << "claim subgraph-absent " << c.pattern << "\n";
            break;
        case Claim::Kind::planar:
            os << "claim planar " << (c.flag ? "true" : "false") << "\n";
            break;
        case Claim::Kind::lists_template:
            for (const auto& [v, l] : c.expected_lists) {
                os << "claim lists-template " << v << " :";
                for (int col : l) os << " " << col;
                os << "\n";
            }
            break;
        case Claim::Kind::precolour_template:
            for (const auto& [v, col] : c.expected_colours)
                os << "claim precolour-template " << v << " = " << col << "\n";
            break;
        case Claim::Kind::edges_present: {
            os << "claim edges-present";
            for (auto [a, b] : c.edges) os << " " << a << " " << b;
            os << "\n";
            break;
        }
        case Claim::Kind::non_gadget_girth: {
            os << "claim non-gadget-girth " << c.value << " :";
            for (auto [a, b] : c.edges) os << " " << a << " " << b;
            os << "\n";
            break;
        }
        }
    }
    return os.str();
}

ReductionCertificate parse_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    ReductionCertificate cert;
    bool have_head = false;
    // lists-template and precolour-template lines accumulate into one claim;
    // indices stay valid while cert.claims grows.
    int tmpl = -1;
    int pre_tmpl = -1;

    while (std::getline(is, line)) {
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "certificate") {
            if (tok.size() != 2) throw ParseError("bad certificate line", line_no);
            cert.construction = tok[1];
            have_head = true;
        } else if (tok[0] == "param") {
            if (tok.size() != 3) throw ParseError("bad param line", line_no);
            cert.params[tok[1]] = std::stoll(tok[2]);
        } else if (tok[0] == "digest") {
            if (tok.size() != 2) throw ParseError("bad digest line", line_no);
            cert.seed_digest = std::stoull(tok[1], nullptr, 16);
        } else if (tok[0] == "note") {
            std::string n;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (i > 1) n += ' ';
                n += tok[i];
            }
            cert.notes.push_back(n);
        } else if (tok[0] == "claim") {
            if (tok.size() < 2) throw ParseError("bad claim line", line_no);
            const std::string& kind = tok[1];
            Claim c;
            if (kind == "list-regular") {
                c.kind = Claim::Kind::list_regular;
                c.value = to_int(tok.at(2), line_no);
                cert.claims.push_back(c);
            } else if (kind == "list-sizes-in") {
                c.kind = Claim::Kind::list_sizes_in;
                for (std::size_t i = 2; i < tok.size(); ++i)
                    c.values.push_back(to_int(tok[i], line_no));
                cert.claims.push_back(c);
            } else if (kind == "girth-at-least") {
                c.kind = Claim::Kind::girth_at_least;
                c.value = to_int(tok.at(2), line_no);
                cert.claims.push_back(c);
            } else if (kind == "max-degree-at-most") {
                c.kind = Claim::Kind::max_degree_at_most;
                c.value = to_int(tok.at(2), line_no);
                cert.claims.push_back(c);
            } else if (kind == "subgraph-absent") {
                c.kind = Claim::Kind::subgraph_absent;
                c.pattern = tok.at(2);
                cert.claims.push_back(c);
            } else if (kind == "planar") {
                c.kind = Claim::Kind::planar;
                c.flag = tok.at(2) == "true";
                cert.claims.push_back(c);
            } else if (kind == "lists-template") {
                int v = to_int(tok.at(2), line_no);
                if (tok.at(3) != ":") throw ParseError("bad lists-template line", line_no);
                ColourList l;
                for (std::size_t i = 4; i < tok.size(); ++i)
                    l.push_back(to_int(tok[i], line_no));
                if (tmpl < 0) {
                    Claim t;
                    t.kind = Claim::Kind::lists_template;
                    cert.claims.push_back(t);
                    tmpl = static_cast<int>(cert.claims.size()) - 1;
                }
                cert.claims[tmpl].expected_lists.push_back({v, std::move(l)});
            } else if (kind == "precolour-template") {
                int v = to_int(tok.at(2), line_no);
                if (tok.at(3) != "=") throw ParseError("bad precolour-template line", line_no);
                int col = to_int(tok.at(4), line_no);
                if (pre_tmpl < 0) {
                    Claim t;
                    t.kind = Claim::Kind::precolour_template;
                    cert.claims.push_back(t);
                    pre_tmpl = static_cast<int>(cert.claims.size()) - 1;
                }
                cert.claims[pre_tmpl].expected_colours.push_back({v, col});
            } else if (kind == "edges-present") {
                c.kind = Claim::Kind::edges_present;
                for (std::size_t i = 2; i + 1 < tok.size(); i += 2)
                    c.edges.push_back({to_int(tok[i], line_no), to_int(tok[i + 1], line_no)});
                cert.claims.push_back(c);
            } else if (kind == "non-gadget-girth") {
                c.kind = Claim::Kind::non_gadget_girth;
                c.value = to_int(tok.at(2), line_no);
                if (tok.at(3) != ":") throw ParseError("bad non-gadget-girth line", line_no);
                for (std::size_t i = 4; i + 1 < tok.size(); i += 2)
                    c.edges.push_back({to_int(tok[i], line_no), to_int(tok[i + 1], line_no)});
                cert.claims.push_back(c);
            } else {
                throw ParseError("unknown claim kind '" + kind + "'", line_no);
            }
        } else {
            throw ParseError("unknown line kind '" + tok[0] + "'", line_no);
        }
    }
    if (!have_head) throw ParseError("missing certificate line", 0);
    return cert;
}

// ---- run reports ----

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "verdict: " << verdict << "\n";
    for (const auto& [k, v] : extras) os << k << ": " << v << "\n";
    if (!colouring.empty()) {
        os << "colouring:";
        for (std::size_t v = 0; v < colouring.size(); ++v)
            os << " " << v << "=" << colouring[v];
        os << "\n";
    }
    return os.str();
}

std::string RunReport::to_json() const {
    auto escape = [](const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out;
    };
    std::ostringstream os;
    os << "{\"command\":\"" << escape(command) << "\",\"verdict\":\"" << escape(verdict)
       << "\"";
    for (const auto& [k, v] : extras) os << ",\"" << escape(k) << "\":\"" << escape(v) << "\"";
    if (!colouring.empty()) {
        os << ",\"colouring\":[";
        for (std::size_t v = 0; v < colouring.size(); ++v) {
            if (v) os << ",";
            os << colouring[v];
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

} // namespace listcol
