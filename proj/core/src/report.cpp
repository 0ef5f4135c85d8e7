#include "primecert/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace primecert {

namespace {

constexpr int kRenderDigits = 20;

std::string render_value(const Rational& x, Round dir) {
    std::string s = decimal_string(x, kRenderDigits, dir);
    const std::string frac = x.str();
    if (!x.is_integer() && frac.size() <= 32) s += " (= " + frac + ")";
    return s;
}

} // namespace

ReportBuilder::ReportBuilder(std::string claim_id, std::string location) {
    rep_.claim_id = std::move(claim_id);
    rep_.location = std::move(location);
}

void ReportBuilder::push(Inequality ineq) {
    if (ineq.verdict == Verdict::fail) all_passed_ = false;
    rep_.inequalities.push_back(std::move(ineq));
}

void ReportBuilder::exact_less(const std::string& desc, const Rational& lhs, const Rational& rhs) {
    Inequality q;
    q.description = desc;
    q.lhs = render_value(lhs, Round::up);
    q.rhs = render_value(rhs, Round::down);
    q.margin = rhs - lhs;
    q.exact = true;
    q.verdict = lhs < rhs ? Verdict::pass : Verdict::fail;
    push(std::move(q));
}

void ReportBuilder::exact_greater(const std::string& desc, const Rational& lhs, const Rational& rhs) {
    Inequality q;
    q.description = desc;
    q.lhs = render_value(lhs, Round::down);
    q.rhs = render_value(rhs, Round::up);
    q.margin = lhs - rhs;
    q.exact = true;
    q.verdict = lhs > rhs ? Verdict::pass : Verdict::fail;
    push(std::move(q));
}

void ReportBuilder::interval_less(const std::string& desc, const Interval& lhs, const Rational& rhs) {
    Inequality q;
    q.description = desc;
    q.lhs = lhs.str(kRenderDigits);
    q.rhs = render_value(rhs, Round::down);
    q.margin = rhs - lhs.hi();
    q.exact = false;
    q.verdict = lhs.hi() < rhs ? Verdict::pass : Verdict::fail;
    push(std::move(q));
}

void ReportBuilder::interval_greater(const std::string& desc, const Interval& lhs, const Rational& rhs) {
    Inequality q;
    q.description = desc;
    q.lhs = lhs.str(kRenderDigits);
    q.rhs = render_value(rhs, Round::up);
    q.margin = lhs.lo() - rhs;
    q.exact = false;
    q.verdict = lhs.lo() > rhs ? Verdict::pass : Verdict::fail;
    push(std::move(q));
}

void ReportBuilder::fact(const std::string& desc, bool ok, const std::string& lhs,
                         const std::string& rhs) {
    Inequality q;
    q.description = desc;
    q.lhs = lhs;
    q.rhs = rhs;
    q.margin = 0;
    q.exact = true;
    q.verdict = ok ? Verdict::pass : Verdict::fail;
    push(std::move(q));
}

void ReportBuilder::note(const std::string& text) {
    rep_.notes.push_back(text);
}

CertificateReport ReportBuilder::finish() {
    rep_.verdict = all_passed_ ? Verdict::pass : Verdict::fail;
    return std::move(rep_);
}

const char* suite_name(SuiteId id) {
    switch (id) {
        case SuiteId::constants: return "constants";
        case SuiteId::table1: return "table1";
        case SuiteId::ranges: return "ranges";
        case SuiteId::records: return "records";
        case SuiteId::tail: return "tail";
        case SuiteId::oracle: return "oracle";
        case SuiteId::crt: return "crt";
    }
    return "?";
}

void SuiteResult::finalize() {
    std::sort(reports.begin(), reports.end(),
              [](const CertificateReport& a, const CertificateReport& b) {
                  return a.claim_id < b.claim_id;
              });
    verdict = Verdict::pass;
    for (const auto& r : reports)
        if (r.verdict == Verdict::fail) verdict = Verdict::fail;
}

std::string render_text(const std::vector<SuiteResult>& suites) {
    std::ostringstream os;
    for (const auto& s : suites) {
        std::size_t claims = 0, checks = 0;
        for (const auto& r : s.reports) {
            ++claims;
            checks += r.inequalities.size();
        }
        os << "suite " << suite_name(s.id) << ": "
           << (s.verdict == Verdict::pass ? "PASS" : "FAIL") << " (" << claims << " claims, "
           << checks << " checks)\n";
        for (const auto& r : s.reports) {
            os << "  [" << (r.verdict == Verdict::pass ? "pass" : "FAIL") << "] " << r.claim_id
               << "  -- " << r.location << "\n";
            for (const auto& q : r.inequalities) {
                os << "      " << (q.verdict == Verdict::pass ? "ok  " : "FAIL") << " "
                   << q.description << "\n";
                os << "           lhs " << q.lhs << "\n";
                os << "           rhs " << q.rhs << "\n";
                os << "           margin " << decimal_string(q.margin, 8, Round::down)
                   << (q.exact ? " (exact)" : " (interval)") << "\n";
            }
            for (const auto& n : r.notes) os << "      note: " << n << "\n";
        }
    }
    return os.str();
}

std::string render_machine(const std::vector<SuiteResult>& suites) {
    nlohmann::ordered_json root;
    root["tool"] = "primecert";
    root["format"] = 1;
    nlohmann::ordered_json jsuites = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        nlohmann::ordered_json js;
        js["suite"] = suite_name(s.id);
        js["verdict"] = s.verdict == Verdict::pass ? "pass" : "fail";
        nlohmann::ordered_json claims = nlohmann::ordered_json::array();
        for (const auto& r : s.reports) {
            nlohmann::ordered_json jr;
            jr["claim_id"] = r.claim_id;
            jr["location"] = r.location;
            jr["verdict"] = r.verdict == Verdict::pass ? "pass" : "fail";
            nlohmann::ordered_json qs = nlohmann::ordered_json::array();
            for (const auto& q : r.inequalities) {
                nlohmann::ordered_json jq;
                jq["check"] = q.description;
                jq["lhs"] = q.lhs;
                jq["rhs"] = q.rhs;
                jq["margin"] = decimal_string(q.margin, 12, Round::down);
                jq["mode"] = q.exact ? "exact" : "interval";
                jq["verdict"] = q.verdict == Verdict::pass ? "pass" : "fail";
                qs.push_back(std::move(jq));
            }
            jr["inequalities"] = std::move(qs);
            if (!r.notes.empty()) jr["notes"] = r.notes;
            claims.push_back(std::move(jr));
        }
        js["claims"] = std::move(claims);
        jsuites.push_back(std::move(js));
    }
    root["suites"] = std::move(jsuites);
    return root.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ResourceError("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f) throw ResourceError("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw ResourceError("atomic rename to " + path + " failed: " + ec.message());
}

} // namespace primecert
