#ifndef HOLONOMY_REPORT_HPP
#define HOLONOMY_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace holonomy {

/// Order-preserving JSON value with a fixed float format (17 significant
/// digits, LF line endings), so that identical runs emit identical bytes.
class Json {
public:
    static Json object() { Json j; j.value_ = Object{}; return j; }
    static Json array() { Json j; j.value_ = Array{}; return j; }
    static Json str(std::string s) { Json j; j.value_ = std::move(s); return j; }
    static Json num(double v) { Json j; j.value_ = v; return j; }
    static Json integer(std::int64_t v) { Json j; j.value_ = v; return j; }
    static Json boolean(bool v) { Json j; j.value_ = v; return j; }

    Json& set(const std::string& key, Json v)
    {
        std::get<Object>(value_).emplace_back(key, std::move(v));
        return *this;
    }

    Json& push(Json v)
    {
        std::get<Array>(value_).push_back(std::move(v));
        return *this;
    }

    std::string dump(int indent = 2) const
    {
        std::string out;
        write(out, indent, 0);
        out.push_back('\n');
        return out;
    }

private:
    struct Object : std::vector<std::pair<std::string, Json>> {};
    struct Array : std::vector<Json> {};
    std::variant<std::monostate, Object, Array, std::string, double, std::int64_t,
                 bool>
        value_;

    static std::string escape(const std::string& s)
    {
        std::string out;
        out.reserve(s.size() + 2);
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out.push_back(c);
                    }
            }
        }
        return out;
    }

    static std::string format_double(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        std::string s = buf;
        // bare integers still need to read back as floating point
        if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
        return s;
    }

    void write(std::string& out, int indent, int depth) const
    {
        const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
        const std::string pad_close(static_cast<std::size_t>(indent * depth), ' ');
        if (std::holds_alternative<std::monostate>(value_)) {
            out += "null";
        } else if (const auto* obj = std::get_if<Object>(&value_)) {
            if (obj->empty()) { out += "{}"; return; }
            out += "{\n";
            for (std::size_t i = 0; i < obj->size(); ++i) {
                out += pad + "\"" + escape((*obj)[i].first) + "\": ";
                (*obj)[i].second.write(out, indent, depth + 1);
                out += i + 1 < obj->size() ? ",\n" : "\n";
            }
            out += pad_close + "}";
        } else if (const auto* arr = std::get_if<Array>(&value_)) {
            if (arr->empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t i = 0; i < arr->size(); ++i) {
                out += pad;
                (*arr)[i].write(out, indent, depth + 1);
                out += i + 1 < arr->size() ? ",\n" : "\n";
            }
            out += pad_close + "]";
        } else if (const auto* s = std::get_if<std::string>(&value_)) {
            out += "\"" + escape(*s) + "\"";
        } else if (const auto* d = std::get_if<double>(&value_)) {
            out += format_double(*d);
        } else if (const auto* i = std::get_if<std::int64_t>(&value_)) {
            out += std::to_string(*i);
        } else if (const auto* b = std::get_if<bool>(&value_)) {
            out += *b ? "true" : "false";
        }
    }
};

/// One verified quantity: computed vs expected with the expected value's
/// provenance ("closed-form" for tabulated constants, "identity" for exact
/// algebraic facts, "oracle" for independently computed references).
struct CheckResult {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    std::string expected_source = "closed-form";
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;

    static CheckResult against(std::string name, double computed, double expected,
                               double tol, std::string source,
                               std::string note = {})
    {
        CheckResult c;
        c.name = std::move(name);
        c.computed = computed;
        c.expected = expected;
        c.abs_error = std::abs(computed - expected);
        c.tolerance = tol;
        c.pass = c.abs_error <= tol;
        c.expected_source = std::move(source);
        c.note = std::move(note);
        return c;
    }

    Json to_json() const
    {
        Json j = Json::object();
        j.set("name", Json::str(name));
        j.set("computed", Json::num(computed));
        j.set("expected", Json::num(expected));
        j.set("expected_source", Json::str(expected_source));
        j.set("abs_error", Json::num(abs_error));
        j.set("tolerance", Json::num(tolerance));
        j.set("pass", Json::boolean(pass));
        if (!note.empty()) j.set("note", Json::str(note));
        return j;
    }
};

struct RunEnvironment {
    int threads = 1;
    std::uint64_t seed = 0;
    int grid2 = 256;
    int grid4 = 32;

    Json to_json() const
    {
        Json j = Json::object();
        j.set("threads", Json::integer(threads));
        j.set("seed", Json::integer(static_cast<std::int64_t>(seed)));
        j.set("grid2", Json::integer(grid2));
        j.set("grid4", Json::integer(grid4));
        return j;
    }
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    RunEnvironment environment;
    double wall_ms = 0.0;

    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::vector<std::string> failing() const
    {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.name);
        return out;
    }

    Json to_json() const
    {
        Json arr = Json::array();
        for (const auto& c : checks) arr.push(c.to_json());
        Json j = Json::object();
        j.set("suite", Json::str(suite));
        j.set("pass", Json::boolean(pass()));
        j.set("checks", std::move(arr));
        j.set("environment", environment.to_json());
        j.set("wall_ms", Json::num(wall_ms));
        return j;
    }
};

}  // namespace holonomy

#endif
