#include "fracmont/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace fracmont {
namespace io {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* const kIdentityCsvHeader =
    "f,w,a,b,x,alpha,lhs,term_main,term_correction,term_derivative,"
    "residual,quadrature_err,tolerance,status";

const char* const kBoundCsvHeader =
    "f,w,a,b,x,alpha,lhs,rhs_closed_paper,rhs_closed_corrected,rhs_direct,"
    "A_paper,A_corrected,B,tightness,degenerate,quadrature_err,tolerance,status";

namespace {

const char* status_str(bool pass) { return pass ? "PASS" : "FAIL"; }

// Function/weight specs may themselves contain commas (e.g. bump:0.4,0.35);
// such fields are double-quoted.
std::string quote_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

} // namespace

std::string to_csv(const IdentityRow& row) {
    const IdentityReport& r = row.report;
    std::ostringstream os;
    os << quote_field(row.f) << ',' << quote_field(row.w) << ',' << format_real(r.frame.a()) << ','
       << format_real(r.frame.b()) << ',' << format_real(r.frame.x()) << ','
       << format_real(r.frame.alpha()) << ',' << format_real(r.lhs) << ','
       << format_real(r.term_main) << ',' << format_real(r.term_correction) << ','
       << format_real(r.term_derivative) << ',' << format_real(r.residual) << ','
       << format_real(r.quadrature_err) << ',' << format_real(row.tolerance) << ','
       << status_str(row.pass);
    return os.str();
}

std::string to_csv(const BoundRow& row) {
    const BoundReport& r = row.report;
    std::ostringstream os;
    os << quote_field(row.f) << ',' << quote_field(row.w) << ',' << format_real(r.frame.a()) << ','
       << format_real(r.frame.b()) << ',' << format_real(r.frame.x()) << ','
       << format_real(r.frame.alpha()) << ',' << format_real(r.lhs) << ','
       << format_real(r.rhs_closed_paper) << ','
       << format_real(r.rhs_closed_corrected) << ',' << format_real(r.rhs_direct)
       << ',' << format_real(r.A_paper) << ',' << format_real(r.A_corrected) << ','
       << format_real(r.B) << ',' << format_real(r.tightness) << ','
       << (r.degenerate ? 1 : 0) << ',' << format_real(r.quadrature_err) << ','
       << format_real(row.tolerance) << ',' << status_str(row.pass);
    return os.str();
}

nlohmann::json to_json(const IdentityRow& row) {
    const IdentityReport& r = row.report;
    return nlohmann::json{
        {"f", row.f},
        {"w", row.w},
        {"a", r.frame.a()},
        {"b", r.frame.b()},
        {"x", r.frame.x()},
        {"alpha", r.frame.alpha()},
        {"lhs", r.lhs},
        {"term_main", r.term_main},
        {"term_correction", r.term_correction},
        {"term_derivative", r.term_derivative},
        {"residual", r.residual},
        {"quadrature_err", r.quadrature_err},
        {"tolerance", row.tolerance},
        {"status", status_str(row.pass)},
    };
}

nlohmann::json to_json(const BoundRow& row) {
    const BoundReport& r = row.report;
    return nlohmann::json{
        {"f", row.f},
        {"w", row.w},
        {"a", r.frame.a()},
        {"b", r.frame.b()},
        {"x", r.frame.x()},
        {"alpha", r.frame.alpha()},
        {"lhs", r.lhs},
        {"rhs_closed_paper", r.rhs_closed_paper},
        {"rhs_closed_corrected", r.rhs_closed_corrected},
        {"rhs_direct", r.rhs_direct},
        {"A_paper", r.A_paper},
        {"A_corrected", r.A_corrected},
        {"B", r.B},
        {"tightness", r.tightness},
        {"degenerate", r.degenerate},
        {"quadrature_err", r.quadrature_err},
        {"tolerance", row.tolerance},
        {"status", status_str(row.pass)},
    };
}

std::string to_table(const IdentityRow& row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%-16s %-14s x=%-8.4g alpha=%-6.4g residual=%- 12.4e "
                  "qerr=%- 10.3e %s",
                  row.f.c_str(), row.w.c_str(), row.report.frame.x(),
                  row.report.frame.alpha(), row.report.residual,
                  row.report.quadrature_err, status_str(row.pass));
    return buf;
}

std::string to_table(const BoundRow& row) {
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "%-16s %-14s x=%-8.4g alpha=%-6.4g lhs=%- 12.5e "
                  "rhs=%- 12.5e tight=%-8.4f %s",
                  row.f.c_str(), row.w.c_str(), row.report.frame.x(),
                  row.report.frame.alpha(), row.report.lhs,
                  row.report.rhs_direct, row.report.tightness,
                  status_str(row.pass));
    return buf;
}

IdentityRow identity_from_csv(const std::string& line) {
    const auto v = split_csv(line);
    if (v.size() != 14) throw Error("identity CSV row needs 14 fields");
    IdentityRow row{v[0], v[1],
                    IdentityReport{ProblemFrame(std::stod(v[2]), std::stod(v[3]),
                                                std::stod(v[4]), std::stod(v[5]))},
                    std::stod(v[12]), v[13] == "PASS"};
    row.report.lhs = std::stod(v[6]);
    row.report.term_main = std::stod(v[7]);
    row.report.term_correction = std::stod(v[8]);
    row.report.term_derivative = std::stod(v[9]);
    row.report.residual = std::stod(v[10]);
    row.report.quadrature_err = std::stod(v[11]);
    return row;
}

BoundRow bound_from_csv(const std::string& line) {
    const auto v = split_csv(line);
    if (v.size() != 18) throw Error("bound CSV row needs 18 fields");
    BoundRow row;
    row.f = v[0];
    row.w = v[1];
    row.report.frame = ProblemFrame(std::stod(v[2]), std::stod(v[3]),
                                    std::stod(v[4]), std::stod(v[5]));
    row.tolerance = std::stod(v[16]);
    row.pass = v[17] == "PASS";
    row.report.lhs = std::stod(v[6]);
    row.report.rhs_closed_paper = std::stod(v[7]);
    row.report.rhs_closed_corrected = std::stod(v[8]);
    row.report.rhs_direct = std::stod(v[9]);
    row.report.A_paper = std::stod(v[10]);
    row.report.A_corrected = std::stod(v[11]);
    row.report.B = std::stod(v[12]);
    row.report.tightness = std::stod(v[13]);
    row.report.degenerate = v[14] == "1";
    row.report.quadrature_err = std::stod(v[15]);
    return row;
}

IdentityRow identity_from_json(const nlohmann::json& j) {
    IdentityRow row{j.at("f"), j.at("w"),
                    IdentityReport{ProblemFrame(j.at("a"), j.at("b"), j.at("x"),
                                                j.at("alpha"))},
                    j.at("tolerance"), j.at("status") == "PASS"};
    row.report.lhs = j.at("lhs");
    row.report.term_main = j.at("term_main");
    row.report.term_correction = j.at("term_correction");
    row.report.term_derivative = j.at("term_derivative");
    row.report.residual = j.at("residual");
    row.report.quadrature_err = j.at("quadrature_err");
    return row;
}

BoundRow bound_from_json(const nlohmann::json& j) {
    BoundRow row;
    row.f = j.at("f");
    row.w = j.at("w");
    row.report.frame = ProblemFrame(j.at("a"), j.at("b"), j.at("x"), j.at("alpha"));
    row.tolerance = j.at("tolerance");
    row.pass = j.at("status") == "PASS";
    row.report.lhs = j.at("lhs");
    row.report.rhs_closed_paper = j.at("rhs_closed_paper");
    row.report.rhs_closed_corrected = j.at("rhs_closed_corrected");
    row.report.rhs_direct = j.at("rhs_direct");
    row.report.A_paper = j.at("A_paper");
    row.report.A_corrected = j.at("A_corrected");
    row.report.B = j.at("B");
    row.report.tightness = j.at("tightness");
    row.report.degenerate = j.at("degenerate");
    row.report.quadrature_err = j.at("quadrature_err");
    return row;
}

} // namespace io
} // namespace fracmont
