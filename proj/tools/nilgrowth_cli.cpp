// Experiment driver over the nilgrowth C API.
//
// Subcommands: content, carry, witness, nilpotence, cofactor, hecke-verify,
// hecke-scan, alpha-scan, gallery.  Exit codes: 0 success, 1 assertion
// failure (at least one exact counterexample is printed), 2 usage or
// internal error.  Identical flags produce byte-identical output; --jobs
// changes scheduling only, never bytes.
//
// The only environment variable honoured is NILGROWTH_DELTA_CACHE: an
// optional directory for caching Delta q-expansion residues (speed only).
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "nilgrowth/nilgrowth.h"

namespace {

struct StringFree {
    void operator()(char* s) const { ng_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct OperatorFree {
    void operator()(ng_operator* op) const { ng_operator_free(op); }
};
using OwnedOperator = std::unique_ptr<ng_operator, OperatorFree>;

// Maps an API status to a process exit code, printing the failure.
int report_status(ng_status st) {
    switch (st) {
        case NG_OK: return 0;
        case NG_ERROR_USAGE:
        case NG_ERROR_DOMAIN: std::cerr << "error: " << ng_last_error() << "\n"; return 2;
        case NG_ERROR_INTERNAL:
        default: std::cerr << "internal error: " << ng_last_error() << "\n"; return 2;
    }
}

// Writes text to the output path, or stdout when the path is empty.
int write_output(const std::string& path, const char* text) {
    if (path.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return 2;
    }
    f.write(text, static_cast<std::streamsize>(std::strlen(text)));
    f.flush();
    if (!f) {
        std::cerr << "error: write failed for output path: " << path << "\n";
        return 2;
    }
    return 0;
}

ng_format parse_format(const std::string& name) {
    if (name == "csv") return NG_FORMAT_CSV;
    if (name == "ndjson") return NG_FORMAT_NDJSON;
    return NG_FORMAT_JSON;  // membership already validated by the parser
}

// Shared flags selecting a recursion operator: either a gallery name or a
// Hecke (p, ell) pair with an optional variant.
struct SourceOpts {
    std::string gallery;
    std::uint64_t p = 0;
    std::uint64_t ell = 0;
    int variant = 0;
};

void add_source_flags(CLI::App* sub, SourceOpts& src) {
    sub->add_option("--gallery", src.gallery, "gallery operator name (see `gallery`)");
    sub->add_option("--hecke-p", src.p, "Hecke characteristic (2 or 3)");
    sub->add_option("--hecke-ell", src.ell, "Hecke prime ell");
    sub->add_option("--hecke-variant", src.variant,
                    "0 = standard; 1 = order-8 form for (2,5); 2 = order-8 plain T_7 for (3,7)")
        ->check(CLI::Range(0, 2));
}

// Builds the selected operator; returns exit code 0 and fills `out` on
// success, otherwise prints the problem and returns 2.
int make_operator(const SourceOpts& src, OwnedOperator& out) {
    const bool has_gallery = !src.gallery.empty();
    const bool has_hecke = src.p != 0 || src.ell != 0;
    if (has_gallery == has_hecke) {
        std::cerr << "error: specify exactly one of --gallery or --hecke-p/--hecke-ell\n";
        return 2;
    }
    ng_operator* raw = nullptr;
    ng_status st = has_gallery ? ng_operator_from_gallery(src.gallery.c_str(), &raw)
                               : ng_operator_hecke(src.p, src.ell, src.variant, &raw);
    if (st != NG_OK) return report_status(st);
    out.reset(raw);
    return 0;
}

// Canonical witness triple (b, d, D) for each Hecke pair.
bool canonical_triple(std::uint64_t p, std::uint64_t ell, std::uint32_t& b, std::uint32_t& d,
                      std::uint32_t& bigd) {
    if (p == 2 && ell == 3) { b = 4, d = 4, bigd = 2; return true; }
    if (p == 2 && ell == 5) { b = 8, d = 8, bigd = 4; return true; }
    if (p == 3 && ell == 2) { b = 3, d = 3, bigd = 1; return true; }
    if (p == 3 && ell == 7) { b = 9, d = 9, bigd = 3; return true; }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* cache = std::getenv("NILGROWTH_DELTA_CACHE"))
        if (*cache) ng_set_delta_cache_dir(cache);

    CLI::App app{"nilgrowth: content functions, nilpotence witnesses, and recursion operators"};
    app.require_subcommand(1);
    int rc = 0;

    auto is_format = CLI::IsMember({"csv", "ndjson", "json"});

    // ---- content ----
    {
        auto* sub = app.add_subcommand("content", "evaluate the content function c_{b,beta}(q)");
        auto b = std::make_shared<std::uint32_t>(0);
        auto beta = std::make_shared<std::uint32_t>(0);
        auto q = std::make_shared<std::string>();
        sub->add_option("--b", *b, "base b >= 2")->required();
        sub->add_option("--beta", *beta, "second base 2 <= beta <= b")->required();
        sub->add_option("--q", *q, "nonnegative rational, `num` or `num/den`")->required();
        sub->callback([&rc, b, beta, q] {
            char* s = nullptr;
            ng_status st = ng_content_eval(*b, *beta, q->c_str(), &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            std::string line = std::string(owned.get()) + "\n";
            rc = write_output("", line.c_str());
        });
    }

    // ---- carry ----
    {
        auto* sub = app.add_subcommand(
            "carry", "carry word r_b(m, n) and the carry-content identity report");
        auto b = std::make_shared<std::uint32_t>(0);
        auto beta = std::make_shared<std::uint32_t>(0);
        auto m = std::make_shared<std::string>();
        auto n = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        sub->add_option("--b", *b, "base b >= 2")->required();
        sub->add_option("--beta", *beta, "optional second base; omit for the word alone");
        sub->add_option("--m", *m, "first addend, nonnegative rational")->required();
        sub->add_option("--n", *n, "second addend, nonnegative rational")->required();
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, b, beta, m, n, output] {
            char* s = nullptr;
            ng_status st = ng_carry_report_json(*b, *beta, m->c_str(), n->c_str(), &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
        });
    }

    // ---- witness ----
    {
        auto* sub = app.add_subcommand(
            "witness", "audit the four nilgrowth-witness properties of c_{b,b-D}(x/d)");
        auto b = std::make_shared<std::uint32_t>(0);
        auto d = std::make_shared<std::uint32_t>(0);
        auto bigd = std::make_shared<std::uint32_t>(0);
        auto n_max = std::make_shared<std::uint64_t>(0);
        auto k_max = std::make_shared<std::uint32_t>(0);
        auto n_budget = std::make_shared<std::uint64_t>(0);
        auto output = std::make_shared<std::string>();
        sub->add_option("--b", *b, "base b")->required();
        sub->add_option("--d", *d, "denominator d")->required();
        sub->add_option("--D", *bigd, "degree drop D")->required();
        sub->add_option("--n-max", *n_max, "discreteness/growth scan bound (default 200)");
        sub->add_option("--k-max", *k_max, "step-property k range (default 2)");
        sub->add_option("--n-budget", *n_budget, "direct step-instance budget (default 200)");
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, b, d, bigd, n_max, k_max, n_budget, output] {
            char* s = nullptr;
            int ok = 0;
            ng_status st =
                ng_witness_report_json(*b, *d, *bigd, *n_max, *k_max, *n_budget, &ok, &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
            if (rc == 0 && !ok) rc = 1;
        });
    }

    // ---- nilpotence ----
    {
        auto* sub = app.add_subcommand(
            "nilpotence", "table of N_T(y^n) for n = 0..n-max under the selected operator");
        auto src = std::make_shared<SourceOpts>();
        auto n_max = std::make_shared<std::uint64_t>(0);
        auto jobs = std::make_shared<unsigned>(0);
        auto format = std::make_shared<std::string>("csv");
        auto output = std::make_shared<std::string>();
        add_source_flags(sub, *src);
        sub->add_option("--n-max", *n_max, "largest exponent n")->required();
        sub->add_option("--jobs", *jobs, "worker threads; 0 = all cores (bytes unaffected)");
        sub->add_option("--format", *format, "csv, ndjson, or json")->check(is_format);
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, src, n_max, jobs, format, output] {
            OwnedOperator op;
            rc = make_operator(*src, op);
            if (rc != 0) return;
            char* s = nullptr;
            ng_status st = ng_nilpotence_table(op.get(), nullptr, *n_max, *jobs,
                                               parse_format(*format), &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
        });
    }

    // ---- cofactor ----
    {
        auto* sub = app.add_subcommand(
            "cofactor", "empty-middle cofactor S with P*S = X^e - y^e + lower total degree");
        auto src = std::make_shared<SourceOpts>();
        auto output = std::make_shared<std::string>();
        add_source_flags(sub, *src);
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, src, output] {
            OwnedOperator op;
            rc = make_operator(*src, op);
            if (rc != 0) return;
            char* s = nullptr;
            ng_status st = ng_cofactor_report_json(op.get(), &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
        });
    }

    // ---- hecke-verify ----
    {
        auto* sub = app.add_subcommand(
            "hecke-verify", "check the Hecke recurrence against q-expansion images, plus U_p");
        auto p = std::make_shared<std::uint64_t>(0);
        auto ell = std::make_shared<std::uint64_t>(0);
        auto n_max = std::make_shared<std::uint64_t>(200);
        auto output = std::make_shared<std::string>();
        sub->add_option("--p", *p, "characteristic (2 or 3)")->required();
        sub->add_option("--ell", *ell, "Hecke prime ell")->required();
        sub->add_option("--n-max", *n_max, "verify for Delta^n, n <= n-max (default 200)");
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, p, ell, n_max, output] {
            char* s = nullptr;
            int ok = 0;
            ng_status st = ng_hecke_verify_json(*p, *ell, *n_max, &ok, &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
            if (rc == 0 && !ok) rc = 1;
        });
    }

    // ---- hecke-scan ----
    {
        auto* sub = app.add_subcommand(
            "hecke-scan",
            "joint nilpotence N(Delta^n) over p-coprime n; json gives the count summary");
        auto p = std::make_shared<std::uint64_t>(0);
        auto n_max = std::make_shared<std::uint64_t>(0);
        auto threshold = std::make_shared<std::int64_t>(2);
        auto k_min = std::make_shared<std::int64_t>(2);
        auto k_max = std::make_shared<std::int64_t>(15);
        auto jobs = std::make_shared<unsigned>(0);
        auto format = std::make_shared<std::string>("csv");
        auto output = std::make_shared<std::string>();
        sub->add_option("--p", *p, "characteristic (2 or 3)")->required();
        sub->add_option("--n-max", *n_max, "largest exponent n")->required();
        sub->add_option("--threshold", *threshold, "ge_threshold column cut (default 2)");
        sub->add_option("--k-min", *k_min, "summary count range start (json format, default 2)");
        sub->add_option("--k-max", *k_max, "summary count range end (json format, default 15)");
        sub->add_option("--jobs", *jobs, "worker threads; 0 = all cores (bytes unaffected)");
        sub->add_option("--format", *format, "csv, ndjson, or json")->check(is_format);
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, p, n_max, threshold, k_min, k_max, jobs, format, output] {
            char* s = nullptr;
            ng_status st = ng_hecke_scan(*p, *n_max, *threshold, *k_min, *k_max, *jobs,
                                         parse_format(*format), &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
        });
    }

    // ---- alpha-scan ----
    {
        auto* sub = app.add_subcommand(
            "alpha-scan", "N_T(y^n) against the witness bound c_{b,b-D}(n/d), with ratio column");
        auto src = std::make_shared<SourceOpts>();
        auto b = std::make_shared<std::uint32_t>(0);
        auto d = std::make_shared<std::uint32_t>(0);
        auto bigd = std::make_shared<std::uint32_t>(0);
        auto n_max = std::make_shared<std::uint64_t>(0);
        auto jobs = std::make_shared<unsigned>(0);
        auto format = std::make_shared<std::string>("csv");
        auto output = std::make_shared<std::string>();
        add_source_flags(sub, *src);
        sub->add_option("--b", *b, "witness base b (defaulted for Hecke sources)");
        sub->add_option("--d", *d, "witness denominator d (defaulted for Hecke sources)");
        sub->add_option("--D", *bigd, "witness degree drop D (defaulted for Hecke sources)");
        sub->add_option("--n-max", *n_max, "largest exponent n")->required();
        sub->add_option("--jobs", *jobs, "worker threads; 0 = all cores (bytes unaffected)");
        sub->add_option("--format", *format, "csv, ndjson, or json")->check(is_format);
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, src, b, d, bigd, n_max, jobs, format, output] {
            if (*b == 0 && *d == 0 && *bigd == 0 &&
                !canonical_triple(src->p, src->ell, *b, *d, *bigd)) {
                std::cerr << "error: no default witness triple for this source; "
                             "pass --b --d --D\n";
                rc = 2;
                return;
            }
            OwnedOperator op;
            rc = make_operator(*src, op);
            if (rc != 0) return;
            char* s = nullptr;
            ng_status st = ng_alpha_table(op.get(), nullptr, *b, *d, *bigd, *n_max, *jobs,
                                          parse_format(*format), &s);
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
        });
    }

    // ---- gallery ----
    {
        auto* sub = app.add_subcommand(
            "gallery", "list example operators, or show one operator's configuration");
        auto name = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        sub->add_option("--name", *name, "print this operator's configuration as JSON");
        sub->add_option("--output", *output, "write to this path instead of stdout");
        sub->callback([&rc, name, output] {
            char* s = nullptr;
            ng_status st;
            if (name->empty()) {
                st = ng_gallery_names(&s);
            } else {
                ng_operator* raw = nullptr;
                st = ng_operator_from_gallery(name->c_str(), &raw);
                if (st == NG_OK) {
                    OwnedOperator op(raw);
                    st = ng_operator_config_json(op.get(), &s);
                }
            }
            if (st != NG_OK) {
                rc = report_status(st);
                return;
            }
            OwnedString owned(s);
            rc = write_output(*output, owned.get());
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
