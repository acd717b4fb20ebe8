#include "asdc/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "asdc/errors.hpp"

namespace asdc {

using nlohmann::json;

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw Error(errc::parse_error, "empty rational");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error(errc::parse_error, "bad rational '" + text + "'");
    if (q.get_den() == 0) throw Error(errc::parse_error, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

namespace {

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(errc::parse_error, "malformed JSON");
    return doc;
}

Mask mask_from_vertex_list(const json& list, int n) {
    if (!list.is_array()) throw Error(errc::parse_error, "facet must be an array of vertices");
    Mask m = 0;
    for (const json& v : list) {
        if (!v.is_number_integer()) throw Error(errc::parse_error, "vertex must be an integer");
        const long long x = v.get<long long>();
        if (x < 1 || x > n)
            throw Error(errc::vertex_out_of_range,
                        "vertex " + std::to_string(x) + " outside [1.." + std::to_string(n) + "]");
        m |= bit(static_cast<int>(x - 1));
    }
    return m;
}

}  // namespace

SimplicialComplex parse_complex_json(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(errc::parse_error, "complex file needs an integer field \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 2 || n > kMaxVertices)
        throw Error(errc::parse_error, "n must be between 2 and 24");
    std::vector<Mask> facets;
    if (doc.contains("facets")) {
        if (!doc["facets"].is_array())
            throw Error(errc::parse_error, "\"facets\" must be an array");
        for (const json& f : doc["facets"]) facets.push_back(mask_from_vertex_list(f, n));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex read_complex_json(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex_json(buf.str());
}

std::string write_complex_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (Mask f : k.facets()) {
        json list = json::array();
        for (int v : mask_vertices(f)) list.push_back(v + 1);
        facets.push_back(std::move(list));
    }
    json doc;
    doc["n"] = k.vertex_count();
    doc["facets"] = std::move(facets);
    return doc.dump();
}

LengthVector parse_lengths_json(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("lengths") || !doc["lengths"].is_array())
        throw Error(errc::parse_error, "length file needs an array field \"lengths\"");
    std::vector<mpq_class> lengths;
    for (const json& l : doc["lengths"]) {
        if (l.is_string())
            lengths.push_back(parse_rational(l.get<std::string>()));
        else if (l.is_number_integer())
            lengths.push_back(mpq_class(static_cast<long>(l.get<long long>())));
        else
            throw Error(errc::parse_error, "lengths must be \"p/q\" strings");
    }
    return LengthVector(std::move(lengths));
}

LengthVector read_lengths_json(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lengths_json(buf.str());
}

std::string write_lengths_json(const LengthVector& l) {
    json list = json::array();
    for (const mpq_class& q : l.lengths()) list.push_back(rational_to_string(q));
    json doc;
    doc["lengths"] = std::move(list);
    return doc.dump();
}

namespace {

class ExpressionParser {
  public:
    ExpressionParser(const SimplicialComplex& k, std::string_view text) : k_(k), text_(text) {}

    ChowClass parse() {
        ChowClass total(k_);
        long long sign = 1;
        skip_ws();
        if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
        total = total + parse_term(sign);
        skip_ws();
        while (pos_ < text_.size()) {
            const char op = take();
            if (op != '+' && op != '-')
                throw Error(errc::parse_error, "expected '+' or '-' in cycle expression");
            total = total + parse_term(op == '-' ? -1 : 1);
            skip_ws();
        }
        return total;
    }

  private:
    char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    long long parse_integer() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += take();
        if (digits.empty()) throw Error(errc::parse_error, "expected an integer");
        return std::stoll(digits);
    }

    Mask parse_block() {
        skip_ws();
        if (take() != '(') throw Error(errc::parse_error, "expected '('");
        Mask m = 0;
        while (true) {
            skip_ws();
            if (peek() == ')') {
                take();
                break;
            }
            const long long v = parse_integer();
            if (v < 1 || v > k_.vertex_count())
                throw Error(errc::vertex_out_of_range,
                            "vertex " + std::to_string(v) + " outside the complex");
            m |= bit(static_cast<int>(v - 1));
        }
        if (subset_size(m) < 2)
            throw Error(errc::parse_error, "blocks need at least two vertices");
        return m;
    }

    ChowClass parse_term(long long sign) {
        skip_ws();
        long long coeff = sign;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_integer();
            saw_number = true;
            skip_ws();
            if (peek() == '*') {
                take();
                skip_ws();
            }
        }
        if (peek() != '(') {
            if (saw_number) return coeff * unit_class(k_);  // bare integer term
            throw Error(errc::parse_error, "expected a block or an integer");
        }
        ChowClass product = unit_class(k_);
        while (peek() == '(') {
            product = multiply(product, cycle_class(k_, {parse_block()}));
            skip_ws();
        }
        return coeff * product;
    }

    const SimplicialComplex& k_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ChowClass parse_cycle_expression(const SimplicialComplex& k, std::string_view text) {
    return ExpressionParser(k, text).parse();
}

std::string format_cycle_expression(const ChowClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [deg, terms] : c.buckets()) {
        for (const auto& [cycle, coeff] : terms) {
            const long long mag = coeff > 0 ? coeff : -coeff;
            if (out.empty())
                out += coeff < 0 ? "-" : "";
            else
                out += coeff < 0 ? " - " : " + ";
            if (mag != 1 || cycle.blocks().empty()) out += std::to_string(mag);
            if (mag != 1 && !cycle.blocks().empty()) out += "*";
            for (Mask b : cycle.blocks()) {
                out += '(';
                bool first = true;
                for (int v : mask_vertices(b)) {
                    if (!first) out += ' ';
                    out += std::to_string(v + 1);
                    first = false;
                }
                out += ')';
            }
        }
    }
    return out;
}

}  // namespace asdc
