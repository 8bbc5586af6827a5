#include "bellconv/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bellconv {

std::string SkippedPole::to_string() const
{
    std::string s = "(";
    s += l ? std::to_string(*l) : "-";
    s += ",";
    s += m ? std::to_string(*m) : "-";
    s += "," + value.to_string() + ")";
    return s;
}

namespace {

nlohmann::ordered_json poles_json(const std::vector<SkippedPole>& poles)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : poles) {
        nlohmann::ordered_json j;
        j["l"] = p.l ? nlohmann::ordered_json(*p.l) : nlohmann::ordered_json(nullptr);
        j["m"] = p.m ? nlohmann::ordered_json(*p.m) : nlohmann::ordered_json(nullptr);
        j["value"] = p.value.to_string();
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

} // namespace

nlohmann::ordered_json IdentityReport::to_json() const
{
    nlohmann::ordered_json j;
    j["identity"] = identity;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params)
        p[k] = v;
    j["params"] = std::move(p);
    j["lhs"] = lhs.to_string();
    j["rhs"] = rhs.to_string();
    j["pass"] = pass;
    j["skipped_poles"] = poles_json(skipped_poles);
    return j;
}

bool Certificate::all_pass() const
{
    return std::all_of(samples.begin(), samples.end(), [](const IdentityReport& r) { return r.pass; });
}

bool Certificate::certified() const
{
    std::set<std::string> distinct;
    for (const auto& r : samples)
        for (const auto& [k, v] : r.params)
            if (k == parameter)
                distinct.insert(v);
    return all_pass() && static_cast<int>(distinct.size()) >= degree_bound + 1;
}

nlohmann::ordered_json Certificate::summary_json() const
{
    nlohmann::ordered_json s;
    s["identity"] = identity;
    s["parameter"] = parameter;
    s["degree_bound"] = degree_bound;
    s["samples"] = samples.size();
    s["passed"] = std::count_if(samples.begin(), samples.end(), [](const IdentityReport& r) { return r.pass; });
    s["skipped_poles"] = poles_json(skipped_poles);
    s["certified"] = certified();
    nlohmann::ordered_json j;
    j["summary"] = std::move(s);
    return j;
}

nlohmann::ordered_json to_json(const std::vector<Rational>& values)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : values)
        arr.push_back(v.to_string());
    return arr;
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports)
{
    std::ostringstream os;
    os << "identity,params,lhs,rhs,pass\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) {
            if (!params.empty())
                params += ";";
            params += k + "=" + v;
        }
        os << csv_field(r.identity) << ',' << csv_field(params) << ',' << csv_field(r.lhs.to_string()) << ','
           << csv_field(r.rhs.to_string()) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string format_params(const std::vector<unsigned>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace bellconv
