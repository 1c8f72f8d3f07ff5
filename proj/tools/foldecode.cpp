/*
   Copyright 2026 the foldecode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1
*/

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldecode/carlitz.hpp"
#include "foldecode/chebotarev.hpp"
#include "foldecode/folded_code.hpp"
#include "foldecode/hermitian_backend.hpp"
#include "foldecode/list_decoder.hpp"
#include "foldecode/rational_backend.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace foldecode;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& content)
{
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << content;
}

/* strict object schema: every listed required key present, nothing else
   beyond the optional ones */
void require_keys(const ordered_json& j, const std::string& what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {})
{
    if (!j.is_object()) fail(ErrorKind::InvalidArgument, what + " must be a JSON object");
    for (const char* key : required)
        if (!j.contains(key)) fail(ErrorKind::InvalidArgument, what + " is missing key '" + key + "'");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : required)
            if (item.key() == key) known = true;
        for (const char* key : optional)
            if (item.key() == key) known = true;
        if (!known) fail(ErrorKind::InvalidArgument, "unknown key '" + item.key() + "' in " + what);
    }
}

BackendPtr backend_from_json(const ordered_json& j)
{
    if (!j.is_object() || !j.contains("kind"))
        fail(ErrorKind::InvalidArgument, "backend descriptor needs a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") {
        require_keys(j, "rational backend descriptor", {"kind", "sigma", "p", "k"}, {"modulus"});
        unsigned long long p = j.at("p").get<unsigned long long>();
        unsigned k = j.at("k").get<unsigned>();
        FieldPtr f;
        if (j.contains("modulus"))
            f = FieldSpec::make(p, k, j.at("modulus").get<std::vector<std::uint32_t>>());
        else
            f = FieldSpec::make(p, k);
        std::string sigma = j.at("sigma").get<std::string>();
        if (sigma == "multiplicative") return RationalBackend::make(f, RationalBackend::Sigma::Multiplicative);
        if (sigma == "additive") return RationalBackend::make(f, RationalBackend::Sigma::Additive);
        fail(ErrorKind::InvalidArgument, "unknown sigma flavor '" + sigma + "'");
    }
    if (kind == "hermitian") {
        require_keys(j, "hermitian backend descriptor", {"kind", "ell"}, {"sigma"});
        if (j.contains("sigma") && j.at("sigma").get<std::string>() != "diagonal")
            fail(ErrorKind::InvalidArgument, "hermitian backend uses the diagonal sigma");
        return HermitianBackend::make(j.at("ell").get<unsigned>());
    }
    fail(ErrorKind::InvalidArgument, "unknown backend kind '" + kind + "'");
}

FoldedCodeParams params_from_file(const std::string& path)
{
    ordered_json j = ordered_json::parse(slurp(path));
    require_keys(j, "code parameter file", {"backend", "m", "N", "l"});
    return make_params(backend_from_json(j.at("backend")), j.at("m").get<unsigned>(),
                       j.at("N").get<unsigned>(), j.at("l").get<int>());
}

ordered_json codeword_to_json(const Codeword& word)
{
    ordered_json arr = ordered_json::array();
    for (const auto& column : word) {
        ordered_json col = ordered_json::array();
        for (const FieldElement& sym : column) col.push_back(sym.hex());
        arr.push_back(std::move(col));
    }
    return arr;
}

Codeword codeword_from_file(const std::string& path, const FoldedCodeParams& code)
{
    ordered_json j = ordered_json::parse(slurp(path));
    if (!j.is_array()) fail(ErrorKind::InvalidArgument, "codeword file must be a JSON array");
    const FieldPtr& f = code.backend->field();
    Codeword word;
    for (const auto& col : j) {
        if (!col.is_array()) fail(ErrorKind::InvalidArgument, "codeword columns must be arrays");
        std::vector<FieldElement> column;
        for (const auto& sym : col) column.push_back(f->from_hex(sym.get<std::string>()));
        word.push_back(std::move(column));
    }
    if (word.size() != code.N) fail(ErrorKind::ShapeMismatch, "codeword has the wrong column count");
    for (const auto& column : word)
        if (column.size() != code.m) fail(ErrorKind::ShapeMismatch, "codeword column has the wrong height");
    return word;
}

std::vector<FieldElement> message_from_file(const std::string& path, const FoldedCodeParams& code)
{
    std::istringstream in(slurp(path));
    const FieldPtr& f = code.backend->field();
    std::vector<FieldElement> message;
    std::string token;
    while (in >> token) message.push_back(f->from_hex(token));
    if (message.size() != code.dimension())
        fail(ErrorKind::LengthMismatch, "message needs exactly " + std::to_string(code.dimension()) +
                                            " symbols, got " + std::to_string(message.size()));
    return message;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

unsigned thread_budget(std::size_t work_items)
{
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("FOLDECODE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            fail(ErrorKind::InvalidArgument, "FOLDECODE_THREADS must be a positive integer");
        n = static_cast<unsigned>(v);
    }
    if (work_items < n) n = static_cast<unsigned>(work_items);
    return n == 0 ? 1 : n;
}

// ---------------------------------------------------------------- encode

int cmd_encode(const std::string& params_path, const std::string& message_path, const std::string& out_path)
{
    FoldedCodeParams code = params_from_file(params_path);
    Codeword word = encode(code, message_from_file(message_path, code));
    spit(out_path, dump(codeword_to_json(word)));
    return 0;
}

// ---------------------------------------------------------------- corrupt

int cmd_corrupt(const std::string& params_path, const std::string& in_path, unsigned errors,
                unsigned long long seed, const std::string& out_path)
{
    FoldedCodeParams code = params_from_file(params_path);
    Codeword word = codeword_from_file(in_path, code);
    if (errors > code.N) fail(ErrorKind::InvalidArgument, "more error columns than columns");

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(code.N);
    for (unsigned i = 0; i < code.N; ++i) order[i] = i;
    for (unsigned i = code.N; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    std::vector<std::size_t> columns(order.begin(), order.begin() + errors);

    ReceivedWord noisy = corrupt(code, word, columns, rng());
    spit(out_path, dump(codeword_to_json(noisy)));
    return 0;
}

// ----------------------------------------------------------------- decode

int cmd_decode(const std::string& params_path, const std::string& dparams_text,
               const std::string& in_path, const std::string& out_path)
{
    FoldedCodeParams code = params_from_file(params_path);
    std::string text = dparams_text;
    if (!text.empty() && text[0] != '{') text = slurp(text);
    ordered_json dj = ordered_json::parse(text);
    require_keys(dj, "decoder parameters", {"s"}, {"enumeration_cap"});
    unsigned s = dj.at("s").get<unsigned>();
    unsigned long long cap = DEFAULT_ENUMERATION_CAP;
    if (dj.contains("enumeration_cap")) cap = dj.at("enumeration_cap").get<unsigned long long>();

    DecoderParams dp = make_decoder_params(code, s);
    CandidateSpace out = decode(codeword_from_file(in_path, code), dp, cap);

    ordered_json result;
    ordered_json msgs = ordered_json::array();
    for (const auto& message : out.list) {
        ordered_json row = ordered_json::array();
        for (const FieldElement& sym : message) row.push_back(sym.hex());
        msgs.push_back(std::move(row));
    }
    result["messages"] = std::move(msgs);
    result["metadata"] = {{"kappa", dp.kappa},
                          {"threshold_t", dp.threshold_t},
                          {"affine_dim", out.affine_dim()}};
    spit(out_path, dump(result));
    return 0;
}

// ------------------------------------------------------------------ bench

struct BenchPoint {
    unsigned m = 0;
    unsigned s = 0;
    std::string r_exact;
    std::string radius_exact;
    std::string radius_thm = "-";
    double success_rate = 0.0;
    double mean_list = 0.0;
    double mean_ms = 0.0;
    std::string status = "ok";
};

std::string format_fixed(double v, int digits)
{
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << v;
    return out.str();
}

int cmd_bench(const std::string& params_path, unsigned trials, unsigned errors,
              unsigned long long seed, const std::string& out_path)
{
    ordered_json j = ordered_json::parse(slurp(params_path));
    require_keys(j, "bench parameter file", {"backend", "N", "l", "grid"});
    BackendPtr backend = backend_from_json(j.at("backend"));
    unsigned n_cols = j.at("N").get<unsigned>();
    int l = j.at("l").get<int>();
    if (!j.at("grid").is_array()) fail(ErrorKind::InvalidArgument, "grid must be an array");

    std::vector<BenchPoint> points;
    for (const auto& cell : j.at("grid")) {
        require_keys(cell, "grid entry", {"m", "s"});
        BenchPoint pt;
        pt.m = cell.at("m").get<unsigned>();
        pt.s = cell.at("s").get<unsigned>();
        try {
            FoldedCodeParams code = make_params(backend, pt.m, n_cols, l);
            DecoderParams dp = make_decoder_params(code, pt.s);
            pt.r_exact = code.rate_bound.str();
            pt.radius_exact = dp.tau.str();
            try {
                pt.radius_thm = tau_asymptotic(backend->field()->order(), pt.m, pt.s, code.rate_bound).str();
            } catch (const Error&) {
                pt.radius_thm = "-"; // needs a square alphabet
            }
            if (errors > code.N) fail(ErrorKind::InvalidArgument, "more error columns than columns");

            std::vector<unsigned char> hits(trials, 0);
            std::vector<std::size_t> sizes(trials, 0);
            std::vector<double> millis(trials, 0.0);
            std::atomic<std::size_t> next{0};
            std::atomic<bool> failed{false};
            std::string failure;
            std::mutex failure_lock;

            auto worker = [&]() {
                for (;;) {
                    std::size_t trial = next.fetch_add(1);
                    if (trial >= trials || failed.load()) return;
                    try {
                        std::mt19937_64 rng(seed + trial);
                        std::vector<FieldElement> message;
                        const FieldPtr& f = code.backend->field();
                        for (std::size_t i = 0; i < code.dimension(); ++i)
                            message.push_back(f->element(rng() % f->order()));
                        Codeword word = encode(code, message);
                        std::vector<std::size_t> order(code.N);
                        for (unsigned i = 0; i < code.N; ++i) order[i] = i;
                        for (unsigned i = code.N; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
                        std::vector<std::size_t> columns(order.begin(), order.begin() + errors);
                        ReceivedWord noisy = corrupt(code, word, columns, rng());

                        auto t0 = std::chrono::steady_clock::now();
                        CandidateSpace result = decode(noisy, dp);
                        auto t1 = std::chrono::steady_clock::now();
                        millis[trial] = std::chrono::duration<double, std::milli>(t1 - t0).count();
                        sizes[trial] = result.list.size();
                        for (const auto& cand : result.list)
                            if (cand == message) hits[trial] = 1;
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> hold(failure_lock);
                        failure = e.what();
                        failed.store(true);
                        return;
                    }
                }
            };
            unsigned workers = thread_budget(trials);
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            if (failed.load()) fail(ErrorKind::InternalError, "trial failed: " + failure);

            double hit_sum = 0.0, size_sum = 0.0, ms_sum = 0.0;
            for (unsigned t = 0; t < trials; ++t) {
                hit_sum += hits[t];
                size_sum += static_cast<double>(sizes[t]);
                ms_sum += millis[t];
            }
            if (trials > 0) {
                pt.success_rate = hit_sum / trials;
                pt.mean_list = size_sum / trials;
                pt.mean_ms = ms_sum / trials;
            }
        } catch (const Error& e) {
            pt.status = error_kind_name(e.kind());
        }
        points.push_back(std::move(pt));
    }

    std::ostringstream csv;
    csv << "m,s,R_exact,radius_exact,radius_thm28,success_rate,mean_list_size,mean_decode_ms,status\n";
    for (const BenchPoint& pt : points) {
        csv << pt.m << ',' << pt.s << ',';
        if (pt.status == "ok") {
            csv << pt.r_exact << ',' << pt.radius_exact << ',' << pt.radius_thm << ','
                << format_fixed(pt.success_rate, 6) << ',' << format_fixed(pt.mean_list, 6) << ','
                << format_fixed(pt.mean_ms, 3);
        } else {
            csv << ",,,,,";
        }
        csv << ',' << pt.status << '\n';
    }
    spit(out_path, csv.str());
    return 0;
}

// ------------------------------------------------------------- classfield

Poly parse_conductor(const FieldPtr& f, const std::string& text) { return Poly::parse(f, text); }

int cmd_classfield_torsion(unsigned long long q, const std::string& q_text, const std::string& out_path)
{
    FieldPtr f = FieldSpec::make_order(q);
    TorsionReport rep = torsion_report(f, parse_conductor(f, q_text));

    ordered_json j;
    j["q"] = q;
    j["modulus"] = rep.modulus.str();
    ordered_json tors = ordered_json::array();
    for (int i = 0; i <= rep.torsion_polynomial.degree(); ++i)
        tors.push_back(rep.torsion_polynomial.coeff(static_cast<std::size_t>(i)).str());
    j["torsion_polynomial"] = std::move(tors);
    ordered_json cyc = ordered_json::array();
    for (const Poly& c : rep.cyclotomic) cyc.push_back(c.str());
    j["cyclotomic"] = std::move(cyc);
    j["cardinality"] = rep.cardinality;
    j["expected_cardinality"] = rep.expected_cardinality;
    j["all_distinct"] = rep.all_distinct;
    j["all_roots"] = rep.all_roots;
    j["annihilator_is_q"] = rep.annihilator_is_q;
    j["cyclic"] = rep.cyclic;
    j["generator_count"] = rep.generator_count;
    j["unit_group_order"] = rep.phi_q;
    spit(out_path, dump(j));
    return 0;
}

int cmd_classfield_params(unsigned long long ell, unsigned long long n, long long g_e,
                          const std::string& out_path)
{
    ClassfieldCodeParameters p = classfield_code_parameters(ell, n, g_e);
    ordered_json j;
    j["ell"] = ell;
    j["n"] = n;
    j["gE"] = g_e;
    j["r"] = p.r;
    j["e"] = p.e;
    j["genus_bound"] = p.genus_bound.str();
    j["rational_place_bound"] = p.rational_place_bound.str();
    j["list_exponent_per_s"] = p.list_exponent_per_s;
    spit(out_path, dump(j));
    return 0;
}

// ------------------------------------------------------------- chebotarev

std::pair<unsigned, unsigned> parse_degree_range(const std::string& text)
{
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            unsigned h = static_cast<unsigned>(std::stoul(text));
            return {h, h};
        }
        unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
        unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        if (lo < 1 || hi < lo) fail(ErrorKind::InvalidArgument, "bad degree range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidArgument, "bad degree range '" + text + "'");
    }
}

int cmd_chebotarev(unsigned long long q, const std::string& q_text, const std::string& range_text,
                   unsigned long long quotient, const std::string& out_path)
{
    FieldPtr f = FieldSpec::make_order(q);
    Poly conductor = parse_conductor(f, q_text);
    auto [lo, hi] = parse_degree_range(range_text);

    std::ostringstream csv;
    csv << "h,class_repr,count,expected,bound,margin\n";
    for (unsigned h = lo; h <= hi; ++h) {
        FrobeniusHistogram hist = chebotarev_check(f, conductor, h, quotient);
        for (const auto& entry : hist.classes) {
            csv << h << ',' << entry.representative.str() << ',' << entry.count << ','
                << entry.expected.str() << ',' << entry.bound.str() << ',' << entry.margin.str()
                << '\n';
        }
    }
    spit(out_path, csv.str());
    return 0;
}

// --------------------------------------------------------------- selftest

int cmd_selftest()
{
    unsigned failures = 0;
    auto suite = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // field axioms at order 16
    {
        bool ok = true;
        FieldPtr f = FieldSpec::make_order(16);
        for (unsigned long long a = 0; a < 16 && ok; ++a) {
            for (unsigned long long b = 0; b < 16 && ok; ++b) {
                FieldElement x = f->element(a), y = f->element(b);
                ok = ok && x * y == y * x && x + y == y + x;
                for (unsigned long long c = 0; c < 16 && ok; ++c) {
                    FieldElement z = f->element(c);
                    ok = ok && (x + y) * z == x * z + y * z;
                }
                if (!y.is_zero()) ok = ok && x * y / y == x;
            }
        }
        suite("field axioms", ok);
    }

    // decode roundtrip at one error on the order-16 multiplicative fold
    {
        bool ok = true;
        try {
            auto backend = RationalBackend::make(FieldSpec::make_order(16));
            FoldedCodeParams code = make_params(backend, 4, 3, 2);
            DecoderParams dp = make_decoder_params(code, 2);
            std::mt19937_64 rng(7);
            const FieldPtr& f = backend->field();
            for (int trial = 0; trial < 10 && ok; ++trial) {
                std::vector<FieldElement> message;
                for (std::size_t i = 0; i < code.dimension(); ++i)
                    message.push_back(f->element(rng() % f->order()));
                Codeword word = encode(code, message);
                ReceivedWord noisy = corrupt(code, word, {static_cast<unsigned>(trial % 3)}, rng());
                CandidateSpace result = decode(noisy, dp);
                bool hit = false;
                for (const auto& cand : result.list) hit = hit || cand == message;
                ok = ok && hit;
            }
        } catch (const std::exception&) {
            ok = false;
        }
        suite("decode roundtrip", ok);
    }

    // torsion facts for small conductors
    {
        bool ok = true;
        try {
            auto f2 = FieldSpec::make_order(2);
            for (int d = 1; d <= 2; ++d) {
                for_each_monic(f2, d, [&](const Poly& q) {
                    TorsionReport rep = torsion_report(f2, q);
                    ok = ok && rep.cyclic && rep.cardinality == rep.expected_cardinality &&
                         rep.generator_count == rep.phi_q;
                });
            }
            auto f3 = FieldSpec::make_order(3);
            for_each_monic(f3, 1, [&](const Poly& q) {
                TorsionReport rep = torsion_report(f3, q);
                ok = ok && rep.cyclic && rep.cardinality == 3;
            });
        } catch (const std::exception&) {
            ok = false;
        }
        suite("torsion facts", ok);
    }

    if (failures > 0) std::cout << failures << " suite(s) failed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"folded algebraic-geometry codes: encoder, list decoder, class-field calculators"};
    app.require_subcommand(1);
    int rc = 0;

    std::string params_path, message_path, in_path, out_path = "-", dparams_text;
    unsigned errors = 0, trials = 100;
    unsigned long long seed = 0;

    auto* enc = app.add_subcommand("encode", "evaluate a message against a folded code");
    enc->add_option("--params", params_path, "code parameter JSON file")->required();
    enc->add_option("--message", message_path, "whitespace-separated hex message symbols")->required();
    enc->add_option("--out", out_path, "output path, '-' for stdout");
    enc->callback([&] { rc = cmd_encode(params_path, message_path, out_path); });

    auto* cor = app.add_subcommand("corrupt", "randomize whole columns of a codeword");
    cor->add_option("--params", params_path, "code parameter JSON file")->required();
    cor->add_option("--in", in_path, "codeword JSON file")->required();
    cor->add_option("--errors", errors, "number of corrupted columns")->required();
    cor->add_option("--seed", seed, "RNG seed (default 0)");
    cor->add_option("--out", out_path, "output path, '-' for stdout");
    cor->callback([&] { rc = cmd_corrupt(params_path, in_path, errors, seed, out_path); });

    auto* dec = app.add_subcommand("decode", "list-decode a received word");
    dec->add_option("--params", params_path, "code parameter JSON file")->required();
    dec->add_option("--dparams", dparams_text, "decoder JSON, inline '{...}' or a file path")->required();
    dec->add_option("--in", in_path, "received word JSON file")->required();
    dec->add_option("--out", out_path, "output path, '-' for stdout");
    dec->callback([&] { rc = cmd_decode(params_path, dparams_text, in_path, out_path); });

    auto* ben = app.add_subcommand("bench", "sweep decoder grid points and emit CSV");
    ben->add_option("--params", params_path, "bench grid JSON file")->required();
    ben->add_option("--trials", trials, "trials per grid point (default 100)");
    ben->add_option("--errors", errors, "corrupted columns per trial");
    ben->add_option("--seed", seed, "base RNG seed (default 0)");
    ben->add_option("--out", out_path, "output path, '-' for stdout");
    ben->callback([&] { rc = cmd_bench(params_path, trials, errors, seed, out_path); });

    unsigned long long q = 2, ell = 4, places = 1;
    long long g_e = 0;
    std::string conductor, degree_range = "4";
    unsigned long long quotient = 0;

    auto* cls = app.add_subcommand("classfield", "class-field calculators");
    cls->require_subcommand(1);
    auto* tor = cls->add_subcommand("torsion", "explicit torsion module of a conductor");
    tor->add_option("--q", q, "base field order")->required();
    tor->add_option("--Q", conductor, "monic conductor polynomial, e.g. \"T^2+T+1\"")->required();
    tor->add_option("--out", out_path, "output path, '-' for stdout");
    tor->callback([&] { rc = cmd_classfield_torsion(q, conductor, out_path); });

    auto* par = cls->add_subcommand("params", "derived parameters of the class-field cover");
    par->add_option("--ell", ell, "alphabet size, a perfect square")->required();
    par->add_option("--n", places, "rational places on the base curve")->required();
    par->add_option("--gE", g_e, "genus of the base curve")->required();
    par->add_option("--out", out_path, "output path, '-' for stdout");
    par->callback([&] { rc = cmd_classfield_params(ell, places, g_e, out_path); });

    auto* che = app.add_subcommand("chebotarev", "Frobenius residue histograms with the explicit bound");
    che->set_help_flag("--help", "print help"); // frees -h for the degree flag
    che->add_option("--q", q, "base field order")->required();
    che->add_option("--Q", conductor, "monic irreducible conductor")->required();
    che->add_option("--h", degree_range, "place degree or range like 4..8")->required();
    che->add_option("--e", quotient, "quotient group order, 0 = full unit group");
    che->add_option("--out", out_path, "output path, '-' for stdout");
    che->callback([&] { rc = cmd_chebotarev(q, conductor, degree_range, quotient, out_path); });

    auto* st = app.add_subcommand("selftest", "run the fixed invariant suites");
    st->callback([&] { rc = cmd_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_tripwire(e.kind()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
