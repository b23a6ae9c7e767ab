#include "render.hpp"

#include <json.hpp>

#include <cstdio>

namespace symres::cli {

namespace {

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string csv_cell(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

} // namespace

std::string render_json(const std::vector<Record>& records, bool with_runtime)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        obj["q"] = r.q;
        obj["m"] = r.m;
        if (r.n) {
            obj["n"] = *r.n;
        }
        obj["check_id"] = r.check_id;
        obj["computed"] = r.computed;
        obj["closed_form"] = r.closed_form;
        obj["match"] = r.match;
        if (r.witness) {
            obj["witness"] = *r.witness;
        }
        if (with_runtime) {
            // Millisecond timings rounded to microseconds.
            obj["runtime_ms"] = std::stod(format_ms(r.runtime_ms));
        }
        out.push_back(std::move(obj));
    }
    return out.dump(2) + "\n";
}

std::string render_csv(const std::vector<Record>& records, bool with_runtime)
{
    std::string out = "q,m,n,check_id,computed,closed_form,match,witness";
    out += with_runtime ? ",runtime_ms\n" : "\n";
    for (const auto& r : records) {
        out += std::to_string(r.q) + ',' + std::to_string(r.m) + ',';
        out += (r.n ? std::to_string(*r.n) : std::string()) + ',';
        out += csv_cell(r.check_id) + ',' + csv_cell(r.computed) + ',' + csv_cell(r.closed_form) + ',';
        out += std::string(r.match ? "true" : "false") + ',';
        out += r.witness ? csv_cell(*r.witness) : std::string();
        if (with_runtime) {
            out += ',' + format_ms(r.runtime_ms);
        }
        out += '\n';
    }
    return out;
}

} // namespace symres::cli
