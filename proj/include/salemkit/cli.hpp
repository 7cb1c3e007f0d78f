/*
   Copyright 2026 The salemkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SALEMKIT_CLI_HPP
#define SALEMKIT_CLI_HPP

// Command-line front end and the polynomial document format.
//
// Exit codes: 0 success, 1 verification or sieve failure, 2 inconclusive,
// 3 usage, parse or I/O error. Only results go to the output stream;
// diagnostics and --timing go to the error stream.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "certify.hpp"
#include "construct.hpp"
#include "cyclo.hpp"
#include "error.hpp"
#include "polynomial.hpp"

namespace salemkit::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInconclusive = 2, kExitUsage = 3 };

// ---------------------------------------------------------------------------
// Documents

struct PolyDocument {
    std::string kind = "raw"; ///< salem-candidate | salem | pisot | raw
    std::optional<long> trace;
    IntPolynomial poly;
    Json metadata = Json::object();

    friend bool operator==(const PolyDocument&, const PolyDocument&) = default;
};

enum class Format { Json, Text };

inline bool is_document_kind(std::string_view k)
{
    return k == "salem-candidate" || k == "salem" || k == "pisot" || k == "raw";
}

inline Json coeffs_json(const IntPolynomial& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(c.get_str());
    return a;
}

/// JSON keys in the order kind, trace, degree, coeffs, metadata; coefficient
/// values are always strings.
inline std::string encode_poly(const PolyDocument& doc, Format fmt = Format::Json)
{
    if (fmt == Format::Text)
        return to_text(doc.poly);
    Json j;
    j["kind"] = doc.kind;
    if (doc.trace)
        j["trace"] = *doc.trace;
    j["degree"] = doc.poly.degree();
    j["coeffs"] = coeffs_json(doc.poly);
    if (!doc.metadata.empty())
        j["metadata"] = doc.metadata;
    return j.dump();
}

namespace detail {

inline std::string position(std::string_view bytes, std::size_t offset)
{
    offset = std::min(offset, bytes.size());
    std::size_t line = 1, col = 0;
    for (std::size_t i = 0; i < offset; ++i) {
        if (bytes[i] == '\n') {
            ++line;
            col = 0;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", offset " + std::to_string(col);
}

[[noreturn]] inline void parse_fail(std::string_view bytes, std::size_t offset, const std::string& what)
{
    throw Error(Errc::ParseError, position(bytes, offset) + ": " + what);
}

inline PolyDocument decode_json(std::string_view bytes)
{
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(bytes, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
    }
    if (!j.is_object())
        parse_fail(bytes, 0, "document must be a JSON object");
    PolyDocument doc;
    if (j.contains("kind")) {
        if (!j["kind"].is_string() || !is_document_kind(j["kind"].get<std::string>()))
            parse_fail(bytes, bytes.find("\"kind\""), "unknown document kind");
        doc.kind = j["kind"].get<std::string>();
    }
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        parse_fail(bytes, 0, "missing coeffs array");
    std::vector<mpz_class> c;
    std::size_t search = bytes.find("\"coeffs\"");
    for (const auto& v : j["coeffs"]) {
        if (!v.is_string())
            parse_fail(bytes, search, "coefficients must be strings");
        const std::string s = v.get<std::string>();
        const std::size_t at = bytes.find('"' + s + '"', search == std::string_view::npos ? 0 : search);
        if (!salemkit::detail::is_integer_token(s))
            parse_fail(bytes, at == std::string_view::npos ? 0 : at + 1, "'" + s + "' is not an integer");
        if (at != std::string_view::npos)
            search = at + s.size() + 2;
        c.emplace_back(s, 10);
    }
    doc.poly = IntPolynomial(std::move(c));
    if (j.contains("degree")) {
        if (!j["degree"].is_number_integer() || j["degree"].get<long>() != doc.poly.degree())
            parse_fail(bytes, bytes.find("\"degree\""), "degree does not match the coefficient list");
    }
    if (j.contains("trace")) {
        if (!j["trace"].is_number_integer())
            parse_fail(bytes, bytes.find("\"trace\""), "trace must be an integer");
        doc.trace = j["trace"].get<long>();
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            parse_fail(bytes, bytes.find("\"metadata\""), "metadata must be an object");
        doc.metadata = j["metadata"];
    }
    return doc;
}

} // namespace detail

/// Every document in `bytes`: one JSON object, or one text polynomial per non-empty line.
inline std::vector<PolyDocument> decode_documents(std::string_view bytes)
{
    const std::size_t first = bytes.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw Error(Errc::ParseError, "line 1, offset 0: empty document");
    if (bytes[first] == '{')
        return {detail::decode_json(bytes)};
    std::vector<PolyDocument> out;
    std::size_t pos = 0, line_no = 1;
    while (pos < bytes.size()) {
        std::size_t nl = bytes.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = bytes.size();
        std::string_view line = bytes.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty()) {
            PolyDocument d;
            d.poly = from_text(line, line_no);
            out.push_back(std::move(d));
        }
        pos = nl + 1;
        ++line_no;
    }
    return out;
}

/// Exactly one document.
inline PolyDocument decode_poly(std::string_view bytes)
{
    auto docs = decode_documents(bytes);
    if (docs.size() != 1)
        throw Error(Errc::ParseError, "expected one polynomial, found " + std::to_string(docs.size()));
    return std::move(docs.front());
}

// ---------------------------------------------------------------------------
// Formatting helpers

enum class Rounding { Down, Up, Nearest };

/// r with `digits` decimals.
inline std::string decimal(const Rational& r, unsigned digits, Rounding mode)
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational x = r * scale;
    if (mode == Rounding::Nearest)
        x += Rational(1, 2);
    mpz_class n;
    if (mode == Rounding::Up)
        mpz_cdiv_q(n.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    else
        mpz_fdiv_q(n.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    const bool neg = n < 0;
    std::string s = mpz_class(abs(n)).get_str();
    if (digits > 0) {
        if (s.size() <= digits)
            s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return neg ? "-" + s : s;
}

inline unsigned decimal_digits(unsigned bits) { return std::max(1u, bits * 30103u / 100000u); }

inline Json value_json(const ValueInterval& v, unsigned bits)
{
    const unsigned d = decimal_digits(bits);
    Json j;
    j["lo"] = decimal(v.first, d + 1, Rounding::Down);
    j["hi"] = decimal(v.second, d + 1, Rounding::Up);
    j["value"] = decimal((v.first + v.second) / 2, d > 2 ? d - 2 : d, Rounding::Nearest);
    return j;
}

inline Json number_or_string(const mpz_class& v)
{
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

inline Json sieve_json(const SieveResult& s)
{
    Json j;
    j["passed"] = s.passed;
    j["witness_degree"] = s.witness_gcd.degree();
    if (!s.stripped_factors.empty()) {
        Json f = Json::array();
        for (const auto& c : s.stripped_factors)
            f.push_back(Json{{"index", c.index}, {"multiplicity", c.multiplicity}});
        j["cyclotomic_factors"] = f;
    }
    return j;
}

inline Json salem_json(const SalemCertificate& c, unsigned bits)
{
    Json j;
    j["verdict"] = std::string(verdict_name(c.verdict));
    j["degree"] = c.degree;
    j["trace"] = number_or_string(c.trace);
    j["monic"] = c.monic;
    j["reciprocal"] = c.reciprocal;
    if (c.roots_inside >= 0) {
        j["squarefree"] = c.squarefree;
        j["roots"] = Json{{"inside", c.roots_inside}, {"at_endpoints", c.roots_at_endpoints}, {"above", c.roots_above}};
        j["method"] = c.method;
    }
    if (c.sieve)
        j["sieve"] = sieve_json(*c.sieve);
    if (c.value)
        j["value"] = value_json(*c.value, bits);
    if (!c.reason.empty())
        j["reason"] = c.reason;
    return j;
}

inline Json pisot_json(const PisotCertificate& c, unsigned bits)
{
    Json j;
    j["verdict"] = std::string(verdict_name(c.verdict));
    j["degree"] = c.degree;
    j["trace"] = number_or_string(c.trace);
    if (c.roots_above_one >= 0)
        j["roots_above_one"] = c.roots_above_one;
    if (c.roots_inside >= 0)
        j["roots_inside"] = c.roots_inside;
    j["circle_free"] = c.circle_free;
    if (c.dominant)
        j["value"] = value_json(*c.dominant, bits);
    if (!c.reason.empty())
        j["reason"] = c.reason;
    return j;
}

inline int exit_for(SalemVerdict v)
{
    switch (v) {
    case SalemVerdict::Salem:
    case SalemVerdict::ReciprocalPisot: return kExitOk;
    case SalemVerdict::Inconclusive: return kExitInconclusive;
    default: return kExitFailed;
    }
}

inline int exit_for(PisotVerdict v)
{
    return v == PisotVerdict::Pisot ? kExitOk : v == PisotVerdict::Inconclusive ? kExitInconclusive : kExitFailed;
}

// Failure beats inconclusive beats success.
inline int combine_exit(int a, int b)
{
    auto rank = [](int c) { return c == kExitFailed ? 2 : c == kExitInconclusive ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

/// Flattens a JSON object into "key: value" lines for --format text.
inline void text_lines(const Json& j, const std::string& prefix, std::string& out)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            text_lines(*it, key, out);
        } else {
            out += key + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
        }
    }
}

inline std::string render(const Json& j, Format fmt)
{
    if (fmt == Format::Json)
        return j.dump() + "\n";
    std::string out;
    text_lines(j, "", out);
    return out;
}

inline std::string interval_text(const RealInterval& v) { return v.to_string(20); }

// ---------------------------------------------------------------------------
// Commands

struct CommonOptions {
    std::string format = "json";
    std::string out_file;
    unsigned precision = kDefaultPrecisionBits;
    bool timing = false;

    [[nodiscard]] Format fmt() const { return format == "text" ? Format::Text : Format::Json; }
};

struct Result {
    int code = kExitOk;
    std::string output;
};

inline Json sieve_with_factors(const IntPolynomial& s)
{
    SieveResult sr = sieve_gcd_test(s);
    if (!sr.passed) {
        // Every Phi_d dividing S divides the witness, so stripping the witness
        // names them; multiplicities are then read off S itself.
        const StripResult st = strip_cyclotomic(sr.witness_gcd);
        for (const auto& f : st.stripped_factors) {
            const IntPolynomial phi = cyclotomic_poly(f.index);
            IntPolynomial rest = s;
            unsigned mult = 0;
            for (;;) {
                auto d = divrem_integral(rest, phi);
                if (!d.integral || !d.remainder.is_zero())
                    break;
                rest = std::move(d.quotient);
                ++mult;
            }
            sr.stripped_factors.push_back({f.index, mult});
        }
    }
    return sieve_json(sr);
}

inline Result gen_salem(unsigned trace, const std::string& policy, bool sieve, bool certify, const CommonOptions& o)
{
    Result r;
    if (policy == "killer") {
        const GenerationRecord rec = generate_salem_candidate(trace, Policy::Killer);
        const KillerPlan& k = *rec.killer;
        Json j;
        j["kind"] = "killer-plan";
        j["trace"] = rec.trace;
        j["n"] = rec.n;
        j["k1"] = Json{{"log_K", interval_text(k.k1.log_K)},
                       {"log_K_exact", k.k1.log_K_exact},
                       {"loglog_K", interval_text(k.k1.loglog_K)}};
        if (k.tail) {
            Json t = Json::array();
            for (auto p : *k.tail)
                t.push_back(p);
            j["k_tail"] = t;
        }
        j["description"] = k.description;
        r.output = render(j, o.fmt());
        return r;
    }
    const GenerationRecord rec = generate_salem_candidate(trace, Policy::FirstPrimes);
    PolyDocument doc;
    doc.kind = "salem-candidate";
    doc.trace = rec.trace;
    doc.poly = rec.reduced();
    Json ks = Json::array();
    for (auto k : rec.exponents)
        ks.push_back(k);
    doc.metadata["exponents"] = ks;
    doc.metadata["predicted_degree"] = *rec.predicted_degree;
    if (sieve && !certify) {
        doc.metadata["sieve"] = sieve_with_factors(doc.poly);
        if (!doc.metadata["sieve"]["passed"].get<bool>())
            r.code = kExitFailed;
    }
    if (certify) {
        const SalemCertificate c = certify_salem(doc.poly, {.compute_value = true, .precision_bits = o.precision});
        doc.metadata["certificate"] = salem_json(c, o.precision);
        if (c.verdict == SalemVerdict::Salem)
            doc.kind = "salem";
        r.code = exit_for(c.verdict);
    }
    r.output = encode_poly(doc, o.fmt()) + "\n";
    return r;
}

inline Result gen_pisot(unsigned trace, bool certify, const CommonOptions& o)
{
    Result r;
    const GenerationRecord rec = generate_pisot(trace);
    PolyDocument doc;
    doc.kind = "raw";
    doc.trace = rec.trace;
    doc.poly = rec.reduced();
    Json ks = Json::array();
    for (auto k : rec.exponents)
        ks.push_back(k);
    doc.metadata["exponents"] = ks;
    doc.metadata["stripped_root_one"] = rec.stripped_root_one;
    doc.metadata["degree_bound"] = *rec.predicted_degree;
    if (certify) {
        const PisotCertificate c = certify_pisot(doc.poly, o.precision);
        doc.metadata["certificate"] = pisot_json(c, o.precision);
        if (c.verdict == PisotVerdict::Pisot)
            doc.kind = "pisot";
        r.code = exit_for(c.verdict);
    }
    r.output = encode_poly(doc, o.fmt()) + "\n";
    return r;
}

inline Result family_cmd(const std::string& name, long n, bool certify, const CommonOptions& o)
{
    Result r;
    const Family f = parse_family(name);
    PolyDocument doc;
    doc.kind = "salem-candidate";
    doc.poly = family(f, n);
    doc.trace = doc.poly.trace().get_si();
    doc.metadata["family"] = name;
    if (f == Family::Quartic)
        doc.metadata["n"] = n;
    if (certify) {
        const SalemCertificate c = certify_salem(doc.poly, {.compute_value = true, .precision_bits = o.precision});
        doc.metadata["certificate"] = salem_json(c, o.precision);
        if (c.verdict == SalemVerdict::Salem)
            doc.kind = "salem";
        r.code = exit_for(c.verdict);
    }
    r.output = encode_poly(doc, o.fmt()) + "\n";
    return r;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::PreconditionFailed, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Result verify_cmd(const std::string& path, const std::string& kind, const CommonOptions& o)
{
    Result r;
    for (const PolyDocument& doc : decode_documents(read_file(path))) {
        std::string k = kind;
        if (k == "auto") {
            if (doc.kind == "pisot")
                k = "pisot";
            else if (doc.kind == "salem" || doc.kind == "salem-candidate")
                k = "salem";
            else
                k = is_reciprocal(doc.poly) ? "salem" : "pisot";
        }
        Json j;
        if (k == "salem") {
            const SalemCertificate c = certify_salem(doc.poly, {.compute_value = true, .precision_bits = o.precision});
            j = salem_json(c, o.precision);
            r.code = combine_exit(r.code, exit_for(c.verdict));
        } else {
            const PisotCertificate c = certify_pisot(doc.poly, o.precision);
            j = pisot_json(c, o.precision);
            r.code = combine_exit(r.code, exit_for(c.verdict));
        }
        r.output += render(j, o.fmt());
    }
    return r;
}

inline Result sieve_cmd(const std::string& path, const CommonOptions& o)
{
    Result r;
    for (const PolyDocument& doc : decode_documents(read_file(path))) {
        const Json j = sieve_with_factors(doc.poly);
        if (!j["passed"].get<bool>())
            r.code = kExitFailed;
        r.output += render(j, o.fmt());
    }
    return r;
}

inline Result bounds_cmd(const std::string& which, long trace, long n, const CommonOptions& o)
{
    Result r;
    Json j;
    if (which == "salem") {
        if (trace < 1)
            throw Error(Errc::BadTrace, "bounds salem needs --trace T >= 1");
        const SalemDegreeBounds b = salem_degree_bounds(static_cast<unsigned>(trace));
        j["trace"] = -trace;
        j["constructed_degree"] = b.constructed_degree;
        j["theoretical_loglog_degree"] = interval_text(b.theoretical_loglog);
        j["chain_lhs"] = interval_text(b.chain_lhs);
        j["chain_holds"] = b.chain_holds;
        if (trace >= 2) {
            j["min_degree"] = min_salem_degree(trace);
            j["min_degree_satisfied"] = min_degree_check(trace, static_cast<long>(b.constructed_degree));
        }
        if (!b.chain_holds)
            r.code = kExitFailed;
    } else if (which == "pisot") {
        if (trace < 0)
            throw Error(Errc::BadTrace, "bounds pisot needs --trace T >= 0");
        j["trace"] = -trace;
        j["degree_bound"] = pisot_degree_bound(static_cast<unsigned>(trace));
    } else {
        if (n < 2 || n % 2 != 0)
            throw Error(Errc::BadParam, "bounds killer needs an even --n >= 2");
        const BoundReport b = killer_exponent_report(static_cast<unsigned>(n));
        j["n"] = b.n;
        j["N"] = b.support_size;
        j["D_squared"] = b.diameter_squared.get_str();
        j["floor_M"] = b.lcm_argument.get_str();
        j["log_PN"] = Json{{"value", interval_text(b.log_PN)}, {"mode", b.log_PN_exact ? "exact" : "bound"}};
        j["log_lcm"] = Json{{"value", interval_text(b.log_lcm)}, {"mode", b.log_lcm_exact ? "exact" : "bound"}};
        j["log_K"] = Json{{"value", interval_text(b.log_K)}, {"mode", b.log_K_exact ? "exact" : "bound"}};
        j["log_K_bound_mode"] = interval_text(b.log_K_bound_mode);
        j["log_K_cap"] = interval_text(b.log_K_cap);
        j["loglog_K"] = interval_text(b.loglog_K);
        j["loglog_K_bound"] = interval_text(b.loglog_K_bound);
        j["log_K_below_cap"] = b.log_K_below_cap;
        j["loglog_K_below_bound"] = b.loglog_K_below_bound;
        if (!b.log_K_below_cap || !b.loglog_K_below_bound)
            r.code = kExitFailed;
    }
    r.output = render(j, o.fmt());
    return r;
}

/// One CSV row per trace 0..max, computed on `jobs` workers and emitted in order.
inline Result table_cmd(const std::string& kind, unsigned max_trace, unsigned jobs, const CommonOptions& o)
{
    Result r;
    const std::size_t rows = static_cast<std::size_t>(max_trace) + 1;
    std::vector<std::string> lines(rows);
    std::vector<int> codes(rows, kExitOk);
    std::vector<std::exception_ptr> errors(rows);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < rows;) {
            try {
                const unsigned tt = static_cast<unsigned>(t);
                if (kind == "salem") {
                    const GenerationRecord rec = generate_salem_candidate(tt);
                    const SieveResult s = sieve_gcd_test(rec.reduced());
                    const ValueInterval v = salem_value(rec.reduced(), o.precision);
                    lines[t] = std::to_string(rec.trace) + "," + std::to_string(rec.reduced().degree()) + "," +
                               (s.passed ? "pass" : "fail") + "," +
                               decimal((v.first + v.second) / 2, 12, Rounding::Nearest);
                    if (!s.passed)
                        codes[t] = kExitFailed;
                } else {
                    const GenerationRecord rec = generate_pisot(tt);
                    const IntPolynomial& p = rec.reduced();
                    const ValueInterval v =
                        refine_real_root(squarefree_part(p), Rational(1), Rational(cauchy_bound(p)), o.precision);
                    lines[t] = std::to_string(rec.trace) + "," + std::to_string(p.degree()) + ",n/a," +
                               decimal((v.first + v.second) / 2, 12, Rounding::Nearest);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    r.output = "trace,degree,sieve,value\n";
    for (std::size_t t = 0; t < rows; ++t) {
        r.output += lines[t] + "\n";
        r.code = combine_exit(r.code, codes[t]);
    }
    return r;
}

inline int exit_for_error(const Error& e)
{
    switch (e.code()) {
    case Errc::Inconclusive: return kExitInconclusive;
    case Errc::NotInterlacing:
    case Errc::NotOnCircle:
    case Errc::NotSimple:
    case Errc::NotAlternating: return kExitFailed;
    default: return kExitUsage;
    }
}

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct and certify Salem and Pisot numbers of prescribed trace", "salemkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", opt.out_file, "Write the output to FILE");
        sub->add_option("--precision", opt.precision, "Bits for value intervals")->check(CLI::Range(1u, 4096u));
        sub->add_flag("--timing", opt.timing, "Report elapsed time on the error stream");
    };

    unsigned trace = 0;
    std::string policy = "first-primes";
    bool want_sieve = false, want_certify = false;

    CLI::App* gen = app.add_subcommand("gen", "Generate a polynomial of given trace");
    gen->require_subcommand(1);
    CLI::App* gen_salem_cmd = gen->add_subcommand("salem", "Salem candidate of trace -T");
    gen_salem_cmd->add_option("--trace", trace, "T (target trace is -T)")->required();
    gen_salem_cmd->add_option("--policy", policy, "Exponent policy")->check(CLI::IsMember({"first-primes", "killer"}));
    gen_salem_cmd->add_flag("--sieve", want_sieve, "Run the cyclotomic sieve");
    gen_salem_cmd->add_flag("--certify", want_certify, "Certify the output");
    common(gen_salem_cmd);
    CLI::App* gen_pisot_cmd = gen->add_subcommand("pisot", "Pisot polynomial of trace -T");
    gen_pisot_cmd->add_option("--trace", trace, "T (target trace is -T)")->required();
    gen_pisot_cmd->add_flag("--certify", want_certify, "Certify the output");
    common(gen_pisot_cmd);

    std::string family_name;
    long family_n = 0;
    CLI::App* fam = app.add_subcommand("family", "Named Salem polynomials");
    fam->add_option("name", family_name, "quartic | sextic-zero | lehmer | degree8")->required();
    fam->add_option("--n", family_n, "Parameter of the quartic family");
    fam->add_flag("--certify", want_certify, "Certify the output");
    common(fam);

    std::string path, verify_kind = "auto";
    CLI::App* ver = app.add_subcommand("verify", "Certify the polynomials in FILE");
    ver->add_option("file", path, "Polynomial file (JSON document or text lines)")->required();
    ver->add_option("--kind", verify_kind, "Certificate kind")->check(CLI::IsMember({"salem", "pisot", "auto"}));
    common(ver);

    CLI::App* sie = app.add_subcommand("sieve", "Cyclotomic sieve on the polynomials in FILE");
    sie->add_option("file", path, "Polynomial file")->required();
    common(sie);

    long bound_trace = -1, bound_n = 0;
    CLI::App* bnd = app.add_subcommand("bounds", "Bound calculators");
    bnd->require_subcommand(1);
    CLI::App* bnd_salem = bnd->add_subcommand("salem", "Degree bounds for the Salem construction");
    bnd_salem->add_option("--trace", bound_trace, "T")->required();
    common(bnd_salem);
    CLI::App* bnd_pisot = bnd->add_subcommand("pisot", "Degree bound for the Pisot construction");
    bnd_pisot->add_option("--trace", bound_trace, "T")->required();
    common(bnd_pisot);
    CLI::App* bnd_killer = bnd->add_subcommand("killer", "Killer exponent report");
    bnd_killer->add_option("--n", bound_n, "Even n >= 2")->required();
    common(bnd_killer);

    std::string table_kind = "salem";
    unsigned max_trace = 0, jobs = 1;
    CLI::App* tab = app.add_subcommand("table", "CSV table over traces 0..T");
    tab->add_option("--kind", table_kind, "salem | pisot")->check(CLI::IsMember({"salem", "pisot"}));
    tab->add_option("--max-trace", max_trace, "Largest T")->required();
    tab->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    common(tab);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
        if (gen_salem_cmd->parsed())
            res = gen_salem(trace, policy, want_sieve, want_certify, opt);
        else if (gen_pisot_cmd->parsed())
            res = gen_pisot(trace, want_certify, opt);
        else if (fam->parsed())
            res = family_cmd(family_name, family_n, want_certify, opt);
        else if (ver->parsed())
            res = verify_cmd(path, verify_kind, opt);
        else if (sie->parsed())
            res = sieve_cmd(path, opt);
        else if (bnd_salem->parsed())
            res = bounds_cmd("salem", bound_trace, 0, opt);
        else if (bnd_pisot->parsed())
            res = bounds_cmd("pisot", bound_trace, 0, opt);
        else if (bnd_killer->parsed())
            res = bounds_cmd("killer", 0, bound_n, opt);
        else if (tab->parsed())
            res = table_cmd(table_kind, max_trace, jobs, opt);
    } catch (const Error& e) {
        err << "salemkit: " << e.what() << "\n";
        return exit_for_error(e);
    } catch (const std::exception& e) {
        err << "salemkit: " << e.what() << "\n";
        return kExitUsage;
    }

    if (opt.out_file.empty()) {
        out << res.output;
        out.flush();
    } else {
        std::ofstream f(opt.out_file, std::ios::binary);
        if (!(f << res.output)) {
            err << "salemkit: cannot write " << opt.out_file << "\n";
            return kExitUsage;
        }
    }
    if (opt.timing) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed: " << s << " s\n";
    }
    if (res.code == kExitFailed)
        err << "salemkit: verification failed\n";
    else if (res.code == kExitInconclusive)
        err << "salemkit: inconclusive\n";
    return res.code;
}

inline int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace salemkit::cli

#endif // SALEMKIT_CLI_HPP
