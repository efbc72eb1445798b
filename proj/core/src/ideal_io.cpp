#include "staircase/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace staircase {

namespace {

// nlohmann reports byte offsets; the CLI contract wants line/column.
std::pair<std::size_t, std::size_t> position_at(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = byte < text.size() ? byte : text.size();
    for (std::size_t k = 0; k < stop; ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail(std::string_view text, std::size_t byte, const std::string& what) {
    auto [line, column] = position_at(text, byte);
    std::ostringstream os;
    os << "ideal parse error at line " << line << ", column " << column << ": " << what;
    throw IdealParseError(os.str(), line, column);
}

} // namespace

IdealParseError::IdealParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message), line_(line), column_(column) {}

StaircaseIdeal parse_ideal(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is one past the offending character.
        fail(text, e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
    if (!doc.is_array() || doc.empty())
        fail(text, 0, "expected a nonempty array of [xexp, yexp] pairs");
    std::vector<Monomial> gens;
    gens.reserve(doc.size());
    for (const auto& entry : doc) {
        if (!entry.is_array() || entry.size() != 2)
            fail(text, 0, "each generator must be a two-element array");
        for (const auto& e : entry) {
            // Nonnegative integers parse as the unsigned number type;
            // negatives and floats do not.
            if (!e.is_number_unsigned())
                fail(text, 0, "exponents must be nonnegative integers");
        }
        gens.push_back({entry[0].get<Exponent>(), entry[1].get<Exponent>()});
    }
    return StaircaseIdeal(std::move(gens));
}

std::string format_ideal(const StaircaseIdeal& ideal) {
    std::string out = "[";
    bool first = true;
    for (Monomial g : ideal.gens()) {
        if (!first)
            out += ',';
        first = false;
        out += '[';
        out += std::to_string(g.xexp);
        out += ',';
        out += std::to_string(g.yexp);
        out += ']';
    }
    out += ']';
    return out;
}

StaircaseIdeal load_ideal_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open ideal file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ideal(buffer.str());
}

void save_ideal_file(const std::string& path, const StaircaseIdeal& ideal) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open file for writing: " + path);
    out << format_ideal(ideal) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string monomial_to_string(Monomial u) {
    if (u.xexp == 0 && u.yexp == 0)
        return "1";
    std::string s;
    if (u.xexp > 0) {
        s += "x";
        if (u.xexp > 1)
            s += "^" + std::to_string(u.xexp);
    }
    if (u.yexp > 0) {
        if (!s.empty())
            s += " ";
        s += "y";
        if (u.yexp > 1)
            s += "^" + std::to_string(u.yexp);
    }
    return s;
}

std::string ideal_to_string(const StaircaseIdeal& ideal) {
    std::string s;
    bool first = true;
    for (Monomial g : ideal.gens()) {
        if (!first)
            s += ", ";
        first = false;
        s += monomial_to_string(g);
    }
    return s;
}

} // namespace staircase
