#include "mmr/instance_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "mmr/splitmix64.hpp"

namespace mmr {

namespace {

// Plain decimal with at most 12 significant digits; never exponent notation,
// so the output stays parseable by parse_rilp.
std::string format_number(double v) {
    if (v == 0.0) return "0";
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    std::string s = buf;
    if (s.find('e') == std::string::npos && s.find('E') == std::string::npos) return s;
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text, int& total_lines) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int num = 0;
    while (std::getline(in, raw)) {
        ++num;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        Line line;
        line.number = num;
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    total_lines = num;
    return lines;
}

// Integers and decimals only; exponents are rejected for cross-platform
// bit stability of the format.
bool is_plain_number(const std::string& t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) return false;
    if (i == t.size()) return true;
    if (t[i] != '.') return false;
    ++i;
    std::size_t frac = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
        ++frac;
    }
    return i == t.size() && frac > 0;
}

double parse_number(const Line& line, const std::string& tok) {
    if (!is_plain_number(tok)) {
        throw ParseError(line.number, "expected a plain decimal number, got '" + tok + "'");
    }
    return std::strtod(tok.c_str(), nullptr);
}

long parse_integer(const Line& line, const std::string& tok) {
    const double v = parse_number(line, tok);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
    return static_cast<long>(v);
}

}  // namespace

IntervalIlpInstance parse_rilp(const std::string& text) {
    int total_lines = 0;
    const std::vector<Line> lines = tokenize(text, total_lines);
    std::size_t k = 0;
    const auto need = [&](const char* what) -> const Line& {
        if (k >= lines.size()) {
            throw ParseError(total_lines + 1, std::string("unexpected end of file, expected ") + what);
        }
        return lines[k];
    };

    {
        const Line& header = need("'RILP 1'");
        if (header.tokens.size() != 2 || header.tokens[0] != "RILP" || header.tokens[1] != "1") {
            throw ParseError(header.number, "expected header 'RILP 1'");
        }
        ++k;
    }

    IntervalIlpInstance inst;
    {
        const Line& name = need("'NAME <id>'");
        if (name.tokens.size() != 2 || name.tokens[0] != "NAME") {
            throw ParseError(name.number, "expected 'NAME <id>'");
        }
        inst.name = name.tokens[1];
        ++k;
    }

    long nvars = 0;
    {
        const Line& vars = need("'VARS <count>'");
        if (vars.tokens.size() != 2 || vars.tokens[0] != "VARS") {
            throw ParseError(vars.number, "expected 'VARS <count>'");
        }
        nvars = parse_integer(vars, vars.tokens[1]);
        if (nvars < 1 || nvars > 1000000) {
            throw MalformedInstance("variable count out of range");
        }
        ++k;
    }

    long ncons = 0;
    {
        const Line& cons = need("'CONS <count>'");
        if (cons.tokens.size() != 2 || cons.tokens[0] != "CONS") {
            throw ParseError(cons.number, "expected 'CONS <count>'");
        }
        ncons = parse_integer(cons, cons.tokens[1]);
        if (ncons < 0 || ncons > 1000000) {
            throw MalformedInstance("constraint count out of range");
        }
        ++k;
    }

    {
        const Line& obj = need("'OBJ'");
        if (obj.tokens.size() != 1 || obj.tokens[0] != "OBJ") {
            throw ParseError(obj.number, "expected 'OBJ'");
        }
        ++k;
    }

    inst.lower.assign(nvars, 0.0);
    inst.upper.assign(nvars, 0.0);
    std::vector<bool> seen(nvars, false);
    for (long i = 0; i < nvars; ++i) {
        const Line& line = need("an 'index l u' objective line");
        if (line.tokens.size() != 3) {
            throw ParseError(line.number, "objective line needs 'index l u'");
        }
        const long idx = parse_integer(line, line.tokens[0]);
        if (idx < 1 || idx > nvars) {
            throw MalformedInstance("objective index " + std::to_string(idx) + " outside 1.." +
                                    std::to_string(nvars));
        }
        if (seen[idx - 1]) {
            throw MalformedInstance("duplicate objective line for variable " + std::to_string(idx));
        }
        seen[idx - 1] = true;
        inst.lower[idx - 1] = parse_number(line, line.tokens[1]);
        inst.upper[idx - 1] = parse_number(line, line.tokens[2]);
        ++k;
    }

    for (long r = 1; r <= ncons; ++r) {
        const Line& head = need("'ROW <id> <SENSE> <rhs>'");
        if (head.tokens.size() != 4 || head.tokens[0] != "ROW") {
            throw ParseError(head.number, "expected 'ROW <id> <SENSE> <rhs>'");
        }
        if (parse_integer(head, head.tokens[1]) != r) {
            throw ParseError(head.number, "expected ROW " + std::to_string(r));
        }
        LinearConstraint row;
        const std::string& sense = head.tokens[2];
        if (sense == "LE") row.sense = Sense::LE;
        else if (sense == "GE") row.sense = Sense::GE;
        else if (sense == "EQ") row.sense = Sense::EQ;
        else throw ParseError(head.number, "unknown sense '" + sense + "'");
        row.rhs = parse_number(head, head.tokens[3]);
        ++k;

        while (k < lines.size() && lines[k].tokens[0] != "ROW" && lines[k].tokens[0] != "END") {
            const Line& term = lines[k];
            if (term.tokens.size() != 2) {
                throw ParseError(term.number, "term line needs 'index coeff'");
            }
            const long idx = parse_integer(term, term.tokens[0]);
            if (idx < 1 || idx > nvars) {
                throw MalformedInstance("constraint references variable index " +
                                        std::to_string(idx) + " outside 1.." +
                                        std::to_string(nvars));
            }
            row.terms.emplace_back(static_cast<int>(idx - 1), parse_number(term, term.tokens[1]));
            ++k;
        }
        if (row.terms.empty()) {
            throw MalformedInstance("ROW " + std::to_string(r) + " has no terms");
        }
        inst.constraints.push_back(std::move(row));
    }

    {
        const Line& end = need("'END'");
        if (end.tokens.size() != 1 || end.tokens[0] != "END") {
            throw ParseError(end.number, "expected 'END'");
        }
        ++k;
    }
    if (k < lines.size()) {
        throw ParseError(lines[k].number, "trailing content after END");
    }

    return normalize(inst);
}

std::string write_rilp(const IntervalIlpInstance& input) {
    const IntervalIlpInstance inst = normalize(input);

    std::string name = inst.name.empty() ? "unnamed" : inst.name;
    for (char& c : name) {
        if (!std::isgraph(static_cast<unsigned char>(c))) c = '_';
    }

    std::string out;
    out += "RILP 1\n";
    out += "NAME " + name + "\n";
    out += "VARS " + std::to_string(inst.num_vars()) + "\n";
    out += "CONS " + std::to_string(inst.constraints.size()) + "\n";
    out += "OBJ\n";
    for (int i = 0; i < inst.num_vars(); ++i) {
        out += std::to_string(i + 1) + " " + format_number(inst.lower[i]) + " " +
               format_number(inst.upper[i]) + "\n";
    }
    for (std::size_t r = 0; r < inst.constraints.size(); ++r) {
        const LinearConstraint& row = inst.constraints[r];
        out += "ROW " + std::to_string(r + 1) + " LE " + format_number(row.rhs) + "\n";
        for (const auto& [idx, coeff] : row.terms) {
            out += std::to_string(idx + 1) + " " + format_number(coeff) + "\n";
        }
    }
    out += "END\n";
    return out;
}

IntervalIlpInstance generate_instance(const GeneratorParams& p) {
    if (p.n < 1) throw InvalidParams("generator: need n >= 1");
    if (p.m < 0) throw InvalidParams("generator: need m >= 0");
    if (!(p.density > 0.0 && p.density <= 1.0)) {
        throw InvalidParams("generator: density must be in (0, 1]");
    }
    if (p.c_min < 1 || p.c_min > p.c_max) {
        throw InvalidParams("generator: need 1 <= c_min <= c_max");
    }
    if (!(p.rho > 0.0 && p.rho <= 1.0)) {
        throw InvalidParams("generator: spread rho must be in (0, 1]");
    }
    if (!(p.rhs_fraction > 0.0 && p.rhs_fraction <= 1.0)) {
        throw InvalidParams("generator: rhs fraction must be in (0, 1]");
    }

    SplitMix64 rng(p.seed);
    const auto quantize = [](double v) { return std::round(v * 1e6) / 1e6; };

    IntervalIlpInstance inst;
    inst.name = p.name.empty() ? "gen-n" + std::to_string(p.n) + "-m" + std::to_string(p.m) +
                                     "-s" + std::to_string(p.seed)
                               : p.name;
    inst.lower.reserve(p.n);
    inst.upper.reserve(p.n);

    // Fixed draw order: per variable the base cost, then the lower and upper
    // endpoints; per row one membership draw for every variable, then one
    // coefficient draw per member. Empty rows are redrawn wholesale.
    for (int i = 0; i < p.n; ++i) {
        const double c = static_cast<double>(rng.next_int(p.c_min, p.c_max));
        inst.lower.push_back(quantize(c * (1.0 - p.rho) + rng.next_double() * (c * p.rho)));
        inst.upper.push_back(quantize(c + rng.next_double() * (c * p.rho)));
    }

    for (int j = 0; j < p.m; ++j) {
        std::vector<int> members;
        while (members.empty()) {
            for (int i = 0; i < p.n; ++i) {
                if (rng.next_double() < p.density) members.push_back(i);
            }
        }
        // Covering row: sum of selected coefficients must reach a fraction of
        // their total, so the all-ones solution is feasible by construction
        // and the minimum is never the empty solution.
        LinearConstraint row;
        double sum = 0.0;
        for (int i : members) {
            const double coeff = static_cast<double>(rng.next_int(1, 50));
            row.terms.emplace_back(i, coeff);
            sum += coeff;
        }
        row.sense = Sense::GE;
        row.rhs = std::ceil(p.rhs_fraction * sum);
        inst.constraints.push_back(std::move(row));
    }

    return normalize(inst);
}

}  // namespace mmr
