#include "topo/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace topo::io {

namespace {

struct Token {
    std::string text;
    int column = 1;
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int to_int(const Token& t, int line) {
    int value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw parse_error(line, t.column, "expected an integer, got '" + t.text + "'");
    return value;
}

Rational to_rational(const Token& t, int line) {
    try {
        return Rational(t.text);
    } catch (const std::exception&) {
        throw parse_error(line, t.column, "expected a rational number, got '" + t.text + "'");
    }
}

Simplex to_simplex(const std::vector<Token>& toks, std::size_t from, std::size_t to, int line) {
    std::vector<int> verts;
    for (std::size_t i = from; i < to; ++i) verts.push_back(to_int(toks[i], line));
    try {
        return Simplex(verts);
    } catch (const std::exception& e) {
        throw parse_error(line, toks[from].column, e.what());
    }
}

std::string simplex_text(const Simplex& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

bool known_section(const std::string& word) {
    return word == "TOPO" || word == "DIM" || word == "VERTICES" || word == "SIMPLICES" ||
           word == "LABELS" || word == "STRATA" || word == "STRATUM" || word == "TRIANGLES" ||
           word == "UP" || word == "HANDLESPEC" || word == "COORDS" || word == "EXPECT";
}

bool data_start(const std::string& word) {
    return !word.empty() &&
           (std::isdigit(static_cast<unsigned char>(word[0])) || word[0] == '-');
}

}  // namespace

ParsedFile parse(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);

    enum class Section {
        none,
        vertices,
        simplices,
        labels,
        strata_head,
        stratum_head,
        stratum_triangles,
        stratum_up,
        handlespec,
        coords,
        expect,
    };

    ParsedFile out;
    bool saw_header = false;
    int declared_dim = -1, dim_line = 0;
    Section section = Section::none;
    int simplex_dim = 0;

    std::vector<int> vertices;
    std::map<int, std::vector<std::pair<Simplex, int>>> listed;  // dim -> (simplex, line)
    std::vector<std::tuple<std::string, Simplex, int, int>> labels;

    struct RawStratum {
        SimplexSet triangles;
        std::map<int, int> up;
        int line = 0;
    };
    std::vector<RawStratum> strata;

    auto finish_stratum = [&]() {
        if (section == Section::stratum_head && strata.back().triangles.empty())
            throw parse_error(strata.back().line, 1, "STRATUM has no TRIANGLES");
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line = static_cast<int>(li) + 1;
        std::vector<Token> toks = tokenize(lines[li]);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (!saw_header) {
            if (head != "TOPO" || toks.size() != 3 || toks[1].text != "COMPLEX" ||
                toks[2].text != "1")
                throw parse_error(line, toks[0].column, "expected header 'TOPO COMPLEX 1'");
            saw_header = true;
            continue;
        }

        if (known_section(head)) {
            if ((section == Section::stratum_head || section == Section::stratum_triangles ||
                 section == Section::stratum_up) &&
                head != "TRIANGLES" && head != "UP")
                finish_stratum();

            if (head == "DIM") {
                if (toks.size() != 2)
                    throw parse_error(line, toks[0].column, "DIM takes one integer");
                declared_dim = to_int(toks[1], line);
                dim_line = line;
                section = Section::none;
            } else if (head == "VERTICES") {
                section = Section::vertices;
            } else if (head == "SIMPLICES") {
                if (toks.size() != 2)
                    throw parse_error(line, toks[0].column, "SIMPLICES takes a dimension");
                simplex_dim = to_int(toks[1], line);
                if (simplex_dim < 1 || simplex_dim > 3)
                    throw parse_error(line, toks[1].column, "dimension must be 1..3");
                section = Section::simplices;
            } else if (head == "LABELS") {
                section = Section::labels;
            } else if (head == "STRATA") {
                section = Section::strata_head;
            } else if (head == "STRATUM") {
                if (section != Section::strata_head && section != Section::stratum_head &&
                    section != Section::stratum_triangles && section != Section::stratum_up)
                    throw parse_error(line, toks[0].column, "STRATUM outside of STRATA");
                strata.push_back(RawStratum{{}, {}, line});
                section = Section::stratum_head;
            } else if (head == "TRIANGLES") {
                if (section != Section::stratum_head && section != Section::stratum_up)
                    throw parse_error(line, toks[0].column, "TRIANGLES outside of STRATUM");
                section = Section::stratum_triangles;
            } else if (head == "UP") {
                if (section != Section::stratum_head && section != Section::stratum_triangles)
                    throw parse_error(line, toks[0].column, "UP outside of STRATUM");
                section = Section::stratum_up;
            } else if (head == "HANDLESPEC") {
                out.handles.emplace();
                section = Section::handlespec;
            } else if (head == "COORDS") {
                section = Section::coords;
            } else if (head == "EXPECT") {
                section = Section::expect;
            }
            continue;
        }

        // data line: label and expectation rows start with a word, everything
        // else starts with a number
        if (!data_start(head) && section != Section::labels && section != Section::expect)
            throw parse_error(line, toks[0].column, "unknown section '" + head + "'");
        if (section == Section::none)
            throw parse_error(line, toks[0].column, "data outside of a section");

        switch (section) {
            case Section::vertices:
                for (const Token& t : toks) vertices.push_back(to_int(t, line));
                break;
            case Section::simplices: {
                if (static_cast<int>(toks.size()) != simplex_dim + 1)
                    throw parse_error(line, toks[0].column,
                                      "expected " + std::to_string(simplex_dim + 1) +
                                          " vertices for a " + std::to_string(simplex_dim) +
                                          "-simplex");
                listed[simplex_dim].push_back({to_simplex(toks, 0, toks.size(), line), line});
                break;
            }
            case Section::labels: {
                const std::string& raw = lines[li];
                std::size_t colon = raw.find(':');
                if (colon == std::string::npos)
                    throw parse_error(line, 1, "label line needs '<name>: <simplices>'");
                std::vector<Token> name_toks = tokenize(raw.substr(0, colon));
                if (name_toks.size() != 1)
                    throw parse_error(line, 1, "label name must be a single word");
                std::string rest = raw.substr(colon + 1);
                std::size_t hash = rest.find('#');
                if (hash != std::string::npos) rest = rest.substr(0, hash);
                std::size_t start = 0;
                while (start <= rest.size()) {
                    std::size_t comma = rest.find(',', start);
                    std::string piece = rest.substr(
                        start, comma == std::string::npos ? std::string::npos : comma - start);
                    std::vector<Token> vt = tokenize(piece);
                    if (!vt.empty()) {
                        for (Token& t : vt)
                            t.column += static_cast<int>(colon) + 1 + static_cast<int>(start);
                        labels.emplace_back(name_toks[0].text,
                                            to_simplex(vt, 0, vt.size(), line), line,
                                            vt[0].column);
                    }
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
                break;
            }
            case Section::stratum_triangles:
                if (toks.size() != 3)
                    throw parse_error(line, toks[0].column, "a triangle needs 3 vertices");
                strata.back().triangles.insert(to_simplex(toks, 0, 3, line));
                break;
            case Section::stratum_up: {
                if (toks.size() != 2)
                    throw parse_error(line, toks[0].column, "an UP row is '<vertex> <lift>'");
                int v = to_int(toks[0], line), w = to_int(toks[1], line);
                if (!strata.back().up.emplace(v, w).second)
                    throw parse_error(line, toks[0].column,
                                      "vertex " + std::to_string(v) + " lifted twice");
                break;
            }
            case Section::handlespec: {
                HandleEvent ev;
                ev.index = to_int(toks[0], line);
                for (std::size_t i = 1; i < toks.size(); ++i)
                    ev.attach.push_back(to_int(toks[i], line));
                out.handles->events.push_back(ev);
                break;
            }
            case Section::coords: {
                if (toks.size() != 4)
                    throw parse_error(line, toks[0].column,
                                      "a coordinate row is '<vertex> <x> <y> <z>'");
                int v = to_int(toks[0], line);
                RatPoint p{to_rational(toks[1], line), to_rational(toks[2], line),
                           to_rational(toks[3], line)};
                if (!out.coords.emplace(v, p).second)
                    throw parse_error(line, toks[0].column,
                                      "vertex " + std::to_string(v) + " placed twice");
                break;
            }
            case Section::expect: {
                if (data_start(toks[0].text))
                    throw parse_error(line, toks[0].column, "an EXPECT row starts with a key");
                std::vector<std::string> values;
                for (std::size_t i = 1; i < toks.size(); ++i) values.push_back(toks[i].text);
                out.expect[toks[0].text] = values;
                break;
            }
            case Section::stratum_head:
                throw parse_error(line, toks[0].column,
                                  "STRATUM needs TRIANGLES and UP subsections");
            default:
                throw parse_error(line, toks[0].column, "data outside of a section");
        }
    }
    if (!saw_header) throw parse_error(1, 1, "expected header 'TOPO COMPLEX 1'");
    if (section == Section::stratum_head) finish_stratum();

    // face closure: every face of every listed simplex must itself be listed
    std::set<int> vset(vertices.begin(), vertices.end());
    std::map<int, std::set<Simplex>> per_dim;
    for (const auto& [d, v] : listed)
        for (const auto& [s, l] : v) per_dim[d].insert(s);
    for (const auto& [d, v] : listed) {
        for (const auto& [s, l] : v) {
            for (int i = 0; i <= s.dim(); ++i) {
                Simplex f = s.facet(i);
                bool present = f.dim() == 0 ? vset.count(f[0]) != 0
                                            : per_dim[f.dim()].count(f) != 0;
                if (!present)
                    throw parse_error(l, 1,
                                      "missing face (" + simplex_text(f) + ") of simplex (" +
                                          simplex_text(s) + ")");
            }
        }
    }

    for (int v : vertices) out.complex.add(Simplex{v});
    for (const auto& [d, v] : listed)
        for (const auto& [s, l] : v) out.complex.add(s);

    if (declared_dim >= 0 && out.complex.dim() != declared_dim)
        throw parse_error(dim_line, 1,
                          "DIM " + std::to_string(declared_dim) + " but the complex has "
                          "dimension " + std::to_string(out.complex.dim()));
    if (declared_dim < 0 && out.complex.count(0) > 0)
        throw parse_error(1, 1, "a nonempty complex needs a DIM line");

    std::map<std::string, SimplexSet> by_name;
    for (const auto& [name, s, l, col] : labels) {
        if (!out.complex.contains(s))
            throw parse_error(l, col,
                              "label '" + name + "' references missing simplex (" +
                                  simplex_text(s) + ")");
        by_name[name].insert(s);
    }
    for (auto& [name, set] : by_name) out.complex.set_label(name, std::move(set));

    if (!strata.empty()) {
        out.strata.emplace();
        for (const RawStratum& rs : strata) {
            SimplicialComplex base;
            try {
                base.add_all(rs.triangles);
                for (int v : base.vertex_ids())
                    if (!rs.up.count(v))
                        throw std::runtime_error("vertex " + std::to_string(v) +
                                                 " has no UP row");
                out.strata->strata.push_back(Stratum(SurfaceComplex(base), rs.up));
            } catch (const parse_error&) {
                throw;
            } catch (const std::exception& e) {
                throw parse_error(rs.line, 1, std::string("invalid stratum: ") + e.what());
            }
        }
    }
    return out;
}

std::string serialize(const ParsedFile& f) {
    std::ostringstream os;
    os << "TOPO COMPLEX 1\n";
    if (f.complex.count(0) > 0) {
        os << "DIM " << f.complex.dim() << "\n";
        os << "VERTICES\n";
        bool first = true;
        for (int v : f.complex.vertex_ids()) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << "\n";
        for (int d = 1; d <= f.complex.dim(); ++d) {
            if (f.complex.count(d) == 0) continue;
            os << "SIMPLICES " << d << "\n";
            for (const auto& s : f.complex.simplices(d)) os << simplex_text(s) << "\n";
        }
        if (!f.complex.labels().empty()) {
            os << "LABELS\n";
            for (const auto& [name, set] : f.complex.labels()) {
                os << name << ":";
                bool first_simplex = true;
                for (const auto& s : set) {
                    os << (first_simplex ? " " : ", ") << simplex_text(s);
                    first_simplex = false;
                }
                os << "\n";
            }
        }
    }
    if (f.strata) {
        os << "STRATA\n";
        for (const auto& st : f.strata->strata) {
            os << "STRATUM\nTRIANGLES\n";
            for (const auto& t : st.base().triangles()) os << simplex_text(t) << "\n";
            os << "UP\n";
            for (const auto& [v, w] : st.up_map()) os << v << " " << w << "\n";
        }
    }
    if (f.handles) {
        os << "HANDLESPEC\n";
        for (const auto& ev : f.handles->events) {
            os << ev.index;
            for (int a : ev.attach) os << " " << a;
            os << "\n";
        }
    }
    if (!f.coords.empty()) {
        os << "COORDS\n";
        for (const auto& [v, p] : f.coords)
            os << v << " " << p[0] << " " << p[1] << " " << p[2] << "\n";
    }
    if (!f.expect.empty()) {
        os << "EXPECT\n";
        for (const auto& [key, values] : f.expect) {
            os << key;
            for (const auto& v : values) os << " " << v;
            os << "\n";
        }
    }
    return os.str();
}

std::string to_off(const std::map<int, Point>& coords, const SimplexSet& triangles) {
    std::map<int, int> index;
    for (const auto& [v, p] : coords) index.emplace(v, static_cast<int>(index.size()));
    std::ostringstream os;
    os << "OFF\n" << coords.size() << " " << triangles.size() << " 0\n";
    char buf[96];
    for (const auto& [v, p] : coords) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p[0], p[1], p[2]);
        os << buf;
    }
    for (const auto& t : triangles) {
        os << "3";
        for (int v : t) os << " " << index.at(v);
        os << "\n";
    }
    return os.str();
}

}  // namespace topo::io
