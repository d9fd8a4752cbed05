#include "steinitz/dataset.hpp"

#include <fstream>
#include <sstream>

namespace steinitz {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

/// Split a bracketed list "[x,y,[z,w]]" into top-level items.
std::vector<std::string> split_list(const std::string& tok, std::size_t line) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        fail(line, "expected a [...] list, got '" + tok + "'");
    std::vector<std::string> items;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
        char c = tok[i];
        if (c == '[' || c == '(')
            ++depth;
        if (c == ']' || c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        items.push_back(cur);
    return items;
}

} // namespace

Rat parse_rat(const std::string& tok) {
    std::string s = tok;
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    if (s.empty())
        throw ParseError("empty rational");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("bad rational '" + tok + "'");
    r.canonicalize();
    return r;
}

KNum parse_knum(const std::string& tok) {
    // forms: "a", "a+bw", "a-bw", "bw"
    std::string s = strip_spaces(tok);
    if (s.empty())
        throw ParseError("empty K-number");
    std::size_t wpos = s.find('w');
    if (wpos == std::string::npos)
        return KNum{parse_rat(s), Rat(0)};
    // split off the omega part: find the sign separating the two terms
    std::string head = s.substr(0, wpos);
    if (!head.empty() && head.back() == '*')
        head.pop_back();
    // scan from the end of head for a '+'/'-' that is not an exponent or
    // leading sign and not inside the numerator/denominator
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    std::string apart, bpart;
    if (split == std::string::npos) {
        apart = "0";
        bpart = head;
    } else {
        apart = head.substr(0, split);
        bpart = head.substr(split);
    }
    if (bpart.empty() || bpart == "+")
        bpart = "1";
    else if (bpart == "-")
        bpart = "-1";
    return KNum{parse_rat(apart), parse_rat(bpart)};
}

ZMat parse_matrix(const std::string& tok) {
    std::string s = strip_spaces(tok);
    auto rows = split_list(s, 0);
    if (rows.empty())
        throw ParseError("empty matrix");
    std::vector<std::vector<Int>> vals;
    for (const auto& r : rows) {
        auto cells = split_list(r, 0);
        std::vector<Int> row;
        for (const auto& c : cells) {
            Int v;
            if (v.set_str(c, 10) != 0)
                throw ParseError("bad integer '" + c + "' in matrix");
            row.push_back(v);
        }
        vals.push_back(std::move(row));
    }
    ZMat m(vals.size(), vals[0].size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i].size() != vals[0].size())
            throw ParseError("ragged matrix");
        for (std::size_t j = 0; j < vals[i].size(); ++j)
            m.at(i, j) = vals[i][j];
    }
    return m;
}

namespace {

TowerElem parse_tower(const std::string& tok, std::size_t line) {
    auto items = split_list(strip_spaces(tok), line);
    if (items.size() != 4)
        fail(line, "tower element needs 4 rational components");
    TowerElem t;
    for (std::size_t i = 0; i < 4; ++i)
        t.c[i] = parse_rat(items[i]);
    return t;
}

CurvePoint parse_point(const std::string& tok, std::size_t line) {
    std::string s = strip_spaces(tok);
    if (s == "O" || s == "inf")
        return CurvePoint::infinite();
    auto parts = split_list(s, line);
    if (parts.size() != 2)
        fail(line, "point needs [x-components],[y-components]");
    return CurvePoint::affine(parse_tower(parts[0], line), parse_tower(parts[1], line));
}

FPoly parse_fpoly(const std::string& tok, std::size_t line) {
    auto items = split_list(strip_spaces(tok), line);
    FPoly p;
    for (const auto& it : items)
        p.push_back(parse_tower(it, line));
    return p;
}

std::vector<KNum> parse_kvec(const std::string& tok, std::size_t line) {
    auto items = split_list(strip_spaces(tok), line);
    std::vector<KNum> v;
    for (const auto& it : items)
        v.push_back(parse_knum(it));
    return v;
}

unsigned parse_unsigned(const std::string& tok, std::size_t line) {
    try {
        return static_cast<unsigned>(std::stoul(tok));
    } catch (...) {
        fail(line, "bad unsigned integer '" + tok + "'");
    }
}

} // namespace

Dataset parse_dataset(std::istream& in) {
    Dataset ds;
    std::string raw;
    std::size_t lineno = 0;
    bool in_entry = false;
    DatasetEntry cur;
    bool have_field = false;

    auto flush = [&](std::size_t line) {
        if (cur.kind == DatasetEntry::Kind::CMLatticeRec ||
            cur.kind == DatasetEntry::Kind::Involution) {
            if (cur.sigma.rows() == 0)
                fail(line, "entry '" + cur.label + "' is missing sigma");
        }
        cur.index = ds.entries.size();
        ds.entries.push_back(cur);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;

        if (!in_entry) {
            std::istringstream is(line);
            std::string word;
            is >> word;
            if (word == "field") {
                std::string kv;
                while (is >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos)
                        fail(lineno, "field takes key=value pairs");
                    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                    Int v;
                    if (v.set_str(val, 10) != 0)
                        fail(lineno, "bad integer '" + val + "'");
                    if (key == "D")
                        ds.D = v;
                    else if (key == "d")
                        ds.d = v;
                    else
                        fail(lineno, "unknown field key '" + key + "'");
                }
                have_field = true;
                continue;
            }
            if (word == "begin") {
                if (!have_field)
                    fail(lineno, "entry before the field line");
                cur = DatasetEntry{};
                std::string kind;
                is >> kind;
                if (kind == "triple")
                    cur.kind = DatasetEntry::Kind::Triple;
                else if (kind == "involution")
                    cur.kind = DatasetEntry::Kind::Involution;
                else if (kind == "cm_lattice")
                    cur.kind = DatasetEntry::Kind::CMLatticeRec;
                else if (kind == "pseudo_module")
                    cur.kind = DatasetEntry::Kind::PseudoModuleRec;
                else if (kind == "curve")
                    cur.kind = DatasetEntry::Kind::CurveRec;
                else
                    fail(lineno, "unknown entry kind '" + kind + "'");
                std::string kv;
                while (is >> kv) {
                    auto eq = kv.find('=');
                    if (eq != std::string::npos && kv.substr(0, eq) == "label")
                        cur.label = kv.substr(eq + 1);
                }
                if (cur.label.empty())
                    cur.label = "entry" + std::to_string(ds.entries.size());
                in_entry = true;
                continue;
            }
            fail(lineno, "expected 'field' or 'begin', got '" + word + "'");
        }

        if (line == "end") {
            flush(lineno);
            in_entry = false;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(lineno, "expected key = value inside entry");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            fail(lineno, "empty key or value");

        if (key == "l")
            cur.l = parse_unsigned(val, lineno);
        else if (key == "h1")
            cur.h1 = Int(val);
        else if (key == "idx")
            cur.idx = Int(val);
        else if (key == "sigma")
            cur.sigma = parse_matrix(val);
        else if (key == "S")
            cur.s = parse_matrix(val);
        else if (key == "n")
            cur.n = parse_unsigned(val, lineno);
        else if (key == "gen")
            cur.gens.push_back(parse_kvec(val, lineno));
        else if (key == "a2")
            cur.a2 = parse_tower(val, lineno);
        else if (key == "a4")
            cur.a4 = parse_tower(val, lineno);
        else if (key == "a6")
            cur.a6 = parse_tower(val, lineno);
        else if (key == "seed_plus")
            cur.seeds_plus.push_back(parse_point(val, lineno));
        else if (key == "seed_minus")
            cur.seeds_minus.push_back(parse_point(val, lineno));
        else if (key == "cm_a_num" || key == "cm_a_den" || key == "cm_b_num" ||
                 key == "cm_b_den") {
            if (!cur.maps)
                cur.maps = CMMapData{};
            FPoly p = parse_fpoly(val, lineno);
            if (key == "cm_a_num")
                cur.maps->a_num = p;
            else if (key == "cm_a_den")
                cur.maps->a_den = p;
            else if (key == "cm_b_num")
                cur.maps->b_num = p;
            else
                cur.maps->b_den = p;
        } else if (key == "expect_sigma")
            cur.expect_sigma = parse_matrix(val);
        else if (key == "expect_S")
            cur.expect_s = parse_matrix(val);
        else if (key == "bound")
            cur.bound = parse_unsigned(val, lineno);
        else if (key == "samples")
            cur.samples = parse_unsigned(val, lineno);
        else if (key.rfind("expect_", 0) == 0)
            cur.expect[key] = strip_spaces(val);
        else
            fail(lineno, "unknown key '" + key + "'");
    }
    if (in_entry)
        throw ParseError("unterminated entry '" + cur.label + "'");
    if (!have_field)
        throw ParseError("dataset has no field line");
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open dataset '" + path + "'");
    return parse_dataset(in);
}

} // namespace steinitz
