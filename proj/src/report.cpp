#include "rtf/report.hpp"

#include <charconv>

namespace rtf {

namespace {

std::string num(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string cplx_json(CplxD z) {
    return "{\"re\":" + num(z.re) + ",\"im\":" + num(z.im) + "}";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string to_json(const VerificationReport& r) {
    std::string s = "{";
    s += "\"params\":{\"weight\":" + std::to_string(r.params.weight) +
         ",\"index\":" + std::to_string(r.params.index) +
         ",\"s1\":" + cplx_json(r.params.s1) + ",\"s2\":" + cplx_json(r.params.s2) + "}";
    s += ",\"spectral\":" + cplx_json(r.spectral);
    s += ",\"geometric\":{\"m2\":[" + cplx_json(r.m2[0]) + "," + cplx_json(r.m2[1]) + "," +
         cplx_json(r.m2[2]) + "," + cplx_json(r.m2[3]) + "],\"e\":[" + cplx_json(r.e1) +
         "," + cplx_json(r.e2) + "," + cplx_json(r.e3) + "],\"total\":" +
         cplx_json(r.geometric) + ",\"e1_terms\":" + std::to_string(r.e1_terms) +
         ",\"e3_terms\":" + std::to_string(r.e3_terms) +
         ",\"central_path\":" + (r.central_path ? "true" : "false") + "}";
    s += ",\"residuals\":{\"abs\":" + num(r.abs_residual) +
         ",\"rel\":" + num(r.rel_residual) + "}";
    s += ",\"pass\":" + std::string(r.pass ? "true" : "false");
    s += ",\"timings\":{\"spectral_ms\":" + num(r.spectral_ms) +
         ",\"geometric_ms\":" + num(r.geometric_ms) + "}";
    s += ",\"provenance\":{\"cache\":\"" + escape(r.cache_id) + "\",\"precision\":\"" +
         escape(r.precision) + "\"}";
    s += ",\"error\":";
    s += r.error.empty() ? "null" : ("\"" + escape(r.error) + "\"");
    s += "}";
    return s;
}

std::string to_json(const std::vector<VerificationReport>& reps) {
    std::string s = "[";
    for (size_t i = 0; i < reps.size(); ++i) {
        if (i) s += ",";
        s += "\n  " + to_json(reps[i]);
    }
    s += "\n]";
    return s;
}

std::string csv_header() {
    return "weight,index,s1_re,s1_im,s2_re,s2_im,spectral_re,spectral_im,"
           "m2_1_re,m2_1_im,m2_2_re,m2_2_im,m2_3_re,m2_3_im,m2_4_re,m2_4_im,"
           "e1_re,e1_im,e2_re,e2_im,e3_re,e3_im,geometric_re,geometric_im,"
           "abs_residual,rel_residual,pass,central_path,e1_terms,e3_terms,precision,error";
}

std::string to_csv_row(const VerificationReport& r) {
    auto c = [](CplxD z) { return num(z.re) + "," + num(z.im); };
    std::string s;
    s += std::to_string(r.params.weight) + "," + std::to_string(r.params.index) + ",";
    s += c(r.params.s1) + "," + c(r.params.s2) + ",";
    s += c(r.spectral) + ",";
    for (int i = 0; i < 4; ++i) s += c(r.m2[size_t(i)]) + ",";
    s += c(r.e1) + "," + c(r.e2) + "," + c(r.e3) + ",";
    s += c(r.geometric) + ",";
    s += num(r.abs_residual) + "," + num(r.rel_residual) + ",";
    s += std::string(r.pass ? "1" : "0") + "," + (r.central_path ? "1" : "0") + ",";
    s += std::to_string(r.e1_terms) + "," + std::to_string(r.e3_terms) + ",";
    s += r.precision + ",";
    std::string err = r.error;
    for (auto& ch : err)
        if (ch == ',' || ch == '\n') ch = ';';
    s += err;
    return s;
}

std::string to_csv(const std::vector<VerificationReport>& reps) {
    std::string s = csv_header() + "\n";
    for (const auto& r : reps) s += to_csv_row(r) + "\n";
    return s;
}

} // namespace rtf
