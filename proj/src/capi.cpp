#include "nilgrowth/nilgrowth.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core/content.hpp"
#include "core/error.hpp"
#include "core/gallery.hpp"
#include "core/hecke.hpp"
#include "core/recop.hpp"
#include "core/runner.hpp"
#include "core/table.hpp"
#include "core/witness.hpp"
#include "core/word.hpp"

// Opaque handle: a named recursion operator.
struct ng_operator {
    std::string name;
    ng::RecursionOperator op;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string g_last_error = "no error";

ng_status set_error(ng_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Runs fn, translating exceptions into status codes + the thread-local
// message.  All exported entry points go through here: exceptions never
// cross the C boundary.
template <typename Fn>
ng_status guarded(Fn&& fn) {
    try {
        fn();
        return NG_OK;
    } catch (const ng::Error& e) {
        switch (e.code()) {
            case ng::ErrorCode::usage: return set_error(NG_ERROR_USAGE, e.what());
            case ng::ErrorCode::domain: return set_error(NG_ERROR_DOMAIN, e.what());
            case ng::ErrorCode::internal: return set_error(NG_ERROR_INTERNAL, e.what());
        }
        return set_error(NG_ERROR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return set_error(NG_ERROR_INTERNAL, e.what());
    } catch (...) {
        return set_error(NG_ERROR_INTERNAL, "unknown exception");
    }
}

char* to_cstring(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) ng::fail_internal("out of memory");
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require_out(const void* p) {
    if (!p) ng::fail_usage("output pointer must not be null");
}

std::string require_text(const char* s, const char* what) {
    if (!s) ng::fail_usage(std::string(what) + " must not be null");
    return s;
}

ng::TableFormat to_table_format(ng_format f) {
    switch (f) {
        case NG_FORMAT_CSV: return ng::TableFormat::csv;
        case NG_FORMAT_NDJSON: return ng::TableFormat::ndjson;
        case NG_FORMAT_JSON: return ng::TableFormat::json;
    }
    ng::fail_usage("unknown format code");
}

// (n, NT) pairs for 0 <= n <= n_max with -1 encoding N_T = -infinity.
std::vector<std::int64_t> nilpotence_values(const ng::RecursionOperator& op,
                                            std::uint64_t n_max) {
    std::vector<ng::Deg> degs = ng::nilpotence_of_powers(op, n_max);
    std::vector<std::int64_t> out(degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i)
        out[i] = degs[i].is_neg_inf() ? -1 : degs[i].value();
    return out;
}

}  // namespace

extern "C" {

const char* ng_last_error(void) { return g_last_error.c_str(); }

void ng_string_free(char* s) { std::free(s); }

ng_status ng_content_eval(uint32_t b, uint32_t beta, const char* q, char** out) {
    return guarded([&] {
        require_out(out);
        ng::NonNegRational v = ng::NonNegRational::parse(require_text(q, "q"));
        ng::NonNegRational c = ng::content(v, ng::ContentParams{b, beta});
        *out = to_cstring(c.to_string());
    });
}

ng_status ng_carry_report_json(uint32_t b, uint32_t beta, const char* m, const char* n,
                               char** out) {
    return guarded([&] {
        require_out(out);
        ng::NonNegRational mv = ng::NonNegRational::parse(require_text(m, "m"));
        ng::NonNegRational nv = ng::NonNegRational::parse(require_text(n, "n"));
        ordered_json doc;
        doc["b"] = b;
        doc["m"] = mv.to_string();
        doc["n"] = nv.to_string();
        if (beta == 0) {
            doc["carry_word"] = ng::carry_word(mv, nv, b).to_string();
        } else {
            ng::ContentParams params{b, beta};
            ng::CarryContent cc = ng::carry_content_identity(mv, nv, params);
            doc["beta"] = beta;
            doc["carry_word"] = cc.word.to_string();
            doc["reed"] = cc.carry_reed.to_string();
            doc["c_m"] = ng::content(mv, params).to_string();
            doc["c_n"] = ng::content(nv, params).to_string();
            doc["c_sum"] = ng::content(mv + nv, params).to_string();
            doc["correction"] = ng::rat_to_string(ng::Rat(static_cast<long>(b) -
                                                          static_cast<long>(beta)) *
                                                  cc.carry_reed.rat());
            doc["lhs"] = ng::rat_to_string(cc.lhs);
            doc["rhs"] = ng::rat_to_string(cc.rhs);
            doc["identity_holds"] = cc.equal;
        }
        *out = to_cstring(doc.dump(2) + "\n");
    });
}

ng_status ng_witness_report_json(uint32_t b, uint32_t d, uint32_t bigd, uint64_t n_max,
                                 uint32_t k_max, uint64_t n_budget, int* ok_out, char** out) {
    return guarded([&] {
        require_out(out);
        ng::FractionTriple t{b, d, bigd};
        t.validate();
        ng::WitnessRanges ranges;
        if (n_max) ranges.n_max = n_max;
        if (k_max) ranges.k_max = k_max;
        if (n_budget) ranges.n_budget = n_budget;
        ng::WitnessReport r = ng::witness_report(t, ranges);
        if (ok_out) *ok_out = r.ok ? 1 : 0;
        *out = to_cstring(ng::witness_report_json(r) + "\n");
    });
}

ng_status ng_operator_from_gallery(const char* name, ng_operator** out) {
    return guarded([&] {
        require_out(out);
        std::string key = require_text(name, "name");
        *out = new ng_operator{key, ng::example_gallery(key)};
    });
}

ng_status ng_operator_hecke(uint64_t p, uint64_t ell, int variant, ng_operator** out) {
    return guarded([&] {
        require_out(out);
        switch (variant) {
            case 0: {
                ng::HeckeOp h = ng::hecke_recursion_operator(p, ell);
                std::string name = "hecke-T" + std::to_string(ell) + (h.modified ? "'" : "") +
                                   "-mod" + std::to_string(p);
                *out = new ng_operator{std::move(name), std::move(h.as_recursion)};
                return;
            }
            case 1:
                if (p != 2 || ell != 5)
                    ng::fail_domain("variant 1 (order-8 P5 cofactor form) exists only for (2,5)");
                *out = new ng_operator{"hecke-T5-mod2-order8", ng::hecke_p5prime_operator()};
                return;
            case 2:
                if (p != 3 || ell != 7)
                    ng::fail_domain("variant 2 (plain T_7 order-8 quotient) exists only for (3,7)");
                *out = new ng_operator{"hecke-T7-mod3-order8", ng::hecke_t7_order8_operator()};
                return;
            default: ng::fail_usage("variant must be 0, 1, or 2");
        }
    });
}

void ng_operator_free(ng_operator* op) { delete op; }

ng_status ng_operator_config_json(const ng_operator* op, char** out) {
    return guarded([&] {
        require_out(out);
        if (!op) ng::fail_usage("operator handle must not be null");
        *out = to_cstring(ng::operator_config_json(op->name, op->op) + "\n");
    });
}

ng_status ng_nilpotence_table(const ng_operator* op, const char* source_label, uint64_t n_max,
                              unsigned jobs, ng_format format, char** out) {
    return guarded([&] {
        require_out(out);
        if (!op) ng::fail_usage("operator handle must not be null");
        std::string label = source_label ? source_label : op->name.c_str();
        std::vector<std::int64_t> nt = nilpotence_values(op->op, n_max);
        ng::Table t;
        t.add_param("source", label);
        t.add_param("ring", op->op.ring().to_string());
        t.add_param("n_max", std::to_string(n_max));
        t.columns = {"n", "NT"};
        auto rows = ng::parallel_rows(0, n_max, jobs, [&]() -> ng::RowFn {
            return [&](std::uint64_t n) {
                return std::vector<ng::Cell>{ng::Cell::of_uint(n), ng::Cell::of_int(nt[n])};
            };
        });
        for (auto& r : rows) t.add_row(std::move(r));
        *out = to_cstring(ng::emit_table(t, to_table_format(format)));
    });
}

ng_status ng_alpha_table(const ng_operator* op, const char* source_label, uint32_t b, uint32_t d,
                         uint32_t bigd, uint64_t n_max, unsigned jobs, ng_format format,
                         char** out) {
    return guarded([&] {
        require_out(out);
        if (!op) ng::fail_usage("operator handle must not be null");
        if (n_max < 1) ng::fail_domain("n_max must be >= 1");
        std::string label = source_label ? source_label : op->name.c_str();
        ng::FractionTriple triple{b, d, bigd};
        triple.validate();
        ng::AlphaEstimate est = ng::alpha_estimate(op->op, n_max);
        ng::Table t;
        t.add_param("source", label);
        t.add_param("ring", op->op.ring().to_string());
        t.add_param("b", std::to_string(b));
        t.add_param("d", std::to_string(d));
        t.add_param("D", std::to_string(bigd));
        t.add_param("n_max", std::to_string(n_max));
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", est.alpha_hat);
            t.add_param("alpha_hat_approx", buf);
        }
        t.columns = {"n", "NT", "c_n", "NT_over_bound_approx"};
        // Exact witness evaluation dominates each row; workers clone the
        // witness so its value cache is never shared.
        auto rows = ng::parallel_rows(1, n_max, jobs, [&]() -> ng::RowFn {
            auto witness = std::make_shared<ng::WitnessFn>(triple);
            return [&, witness](std::uint64_t n) {
                std::int64_t nt = est.samples[n].second;
                ng::NonNegRational cn = witness->value_at(n);
                std::vector<ng::Cell> row{ng::Cell::of_uint(n), ng::Cell::of_int(nt),
                                          ng::Cell::of_text(cn.to_string()), ng::Cell::none()};
                if (nt >= 0 && !cn.is_zero())
                    row[3] = ng::Cell::of_approx(static_cast<double>(nt) / cn.approx());
                return row;
            };
        });
        for (auto& r : rows) t.add_row(std::move(r));
        *out = to_cstring(ng::emit_table(t, to_table_format(format)));
    });
}

ng_status ng_cofactor_report_json(const ng_operator* op, char** out) {
    return guarded([&] {
        require_out(out);
        if (!op) ng::fail_usage("operator handle must not be null");
        const ng::CompanionPoly& comp = op->op.companion();
        ng::Cofactor cof = ng::empty_middle_cofactor(comp);
        ng::CofactorProductShape shape = ng::cofactor_product_shape(comp, cof);
        ordered_json doc;
        doc["source"] = op->name;
        doc["ring"] = comp.ring.to_string();
        doc["order"] = comp.order();
        doc["companion"] = comp.to_string_poly();
        doc["cofactor"] = cof.to_string();
        doc["e"] = cof.e;
        doc["q"] = cof.q;
        doc["m"] = cof.m;
        doc["product"] = {{"leading_ok", shape.leading_ok},
                          {"y_e_coeff", shape.y_e_coeff},
                          {"max_middle_total_degree", shape.max_middle_total_degree},
                          {"empty_middle_D", shape.empty_middle_D}};
        *out = to_cstring(doc.dump(2) + "\n");
    });
}

ng_status ng_hecke_verify_json(uint64_t p, uint64_t ell, uint64_t n_max, int* ok_out,
                               char** out) {
    return guarded([&] {
        require_out(out);
        ng::RecursionVerdict v = ng::verify_hecke_recursion(p, ell, n_max);
        ng::KernelVerdict k = ng::kernel_check(p, n_max);
        bool ok = v.ok_from_order() && k.ok;
        ordered_json doc;
        doc["p"] = p;
        doc["ell"] = ell;
        doc["n_max"] = n_max;
        doc["recurrence"] = {{"order", v.order},
                             {"first_valid_n", v.first_valid_n},
                             {"first_fail_n", v.first_fail_n},
                             {"ok", v.ok_from_order()}};
        if (p == 2 && ell == 5) {
            ng::RecursionVerdict v8 = ng::verify_companion_against_oracle(
                ng::hecke_p5prime_operator().companion(), 2, 5, false, n_max);
            doc["order8_variant"] = {{"order", v8.order},
                                     {"first_valid_n", v8.first_valid_n},
                                     {"first_fail_n", v8.first_fail_n},
                                     {"ok", v8.ok_from_order()}};
            ok = ok && v8.ok_from_order();
        }
        if (p == 3 && ell == 7) {
            ng::RecursionVerdict v8 = ng::verify_companion_against_oracle(
                ng::hecke_t7_order8_operator().companion(), 3, 7, false, n_max);
            doc["order8_variant"] = {{"order", v8.order},
                                     {"first_valid_n", v8.first_valid_n},
                                     {"first_fail_n", v8.first_fail_n},
                                     {"ok", v8.ok_from_order()}};
            ok = ok && v8.ok_from_order();
        }
        doc["kernel"] = {{"ok", k.ok},
                         {"first_violation_n", k.first_violation_n},
                         {"detail", k.detail}};
        doc["ok"] = ok;
        if (ok_out) *ok_out = ok ? 1 : 0;
        *out = to_cstring(doc.dump(2) + "\n");
    });
}

ng_status ng_hecke_scan(uint64_t p, uint64_t n_max, int64_t threshold, int64_t k_min,
                        int64_t k_max, unsigned jobs, ng_format format, char** out) {
    return guarded([&] {
        require_out(out);
        std::vector<ng::JointRow> table = ng::joint_nilpotence(p, n_max);
        if (format == NG_FORMAT_JSON) {
            ordered_json doc;
            doc["params"] = {{"p", std::to_string(p)},
                             {"n_max", std::to_string(n_max)},
                             {"k_min", std::to_string(k_min)},
                             {"k_max", std::to_string(k_max)}};
            ordered_json summary =
                ordered_json::parse(ng::hilbert_samuel_summary_json(table, k_min, k_max));
            for (auto& [key, value] : summary.items()) doc[key] = std::move(value);
            *out = to_cstring(doc.dump(2) + "\n");
            return;
        }
        ng::Table t;
        t.add_param("p", std::to_string(p));
        t.add_param("n_max", std::to_string(n_max));
        t.add_param("threshold", std::to_string(threshold));
        t.columns = {"n", "NT", "NS", "N", "ge_threshold"};
        if (!table.empty()) {
            auto rows = ng::parallel_rows(0, table.size() - 1, jobs, [&]() -> ng::RowFn {
                return [&](std::uint64_t i) {
                    const ng::JointRow& r = table[i];
                    return std::vector<ng::Cell>{ng::Cell::of_uint(r.n), ng::Cell::of_int(r.nt),
                                                 ng::Cell::of_int(r.ns), ng::Cell::of_int(r.total),
                                                 ng::Cell::of_bool(r.total >= threshold)};
                };
            });
            for (auto& r : rows) t.add_row(std::move(r));
        }
        *out = to_cstring(ng::emit_table(t, to_table_format(format)));
    });
}

ng_status ng_gallery_names(char** out) {
    return guarded([&] {
        require_out(out);
        std::string joined;
        for (const std::string& name : ng::gallery_names()) joined += name + "\n";
        *out = to_cstring(joined);
    });
}

ng_status ng_set_delta_cache_dir(const char* dir) {
    return guarded([&] { ng::set_delta_cache_dir(dir ? dir : ""); });
}

}  // extern "C"
