#include <sepr/catalog.hpp>
#include <sepr/io_json.hpp>
#include <sepr/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace sepr;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json verdict_to_json(const std::string& seq, const rules::Verdict& v) {
    json j{{"sequence", seq}, {"status", std::string(rules::to_string(v.status))},
           {"violations", v.violations}};
    if (v.witness_ref) j["witness"] = *v.witness_ref;
    return j;
}

json check_report_to_json(const search::CheckReport& rep) {
    json items = json::array();
    for (const auto& c : rep.items) {
        json it{{"name", c.name}, {"cases", c.cases}, {"pass", !c.failure.has_value()}};
        if (c.failure) it["failure"] = *c.failure;
        items.push_back(std::move(it));
    }
    return items;
}

struct ComputeOptions {
    std::string file;
    bool want_sepr = false, want_epr = false, want_pr = false, want_all = false;
    bool check_rules = false;
    std::string cls = "hermitian";
};

int run_compute(const ComputeOptions& opt, bool as_json) {
    HermitianMatrix m = matrix_from_json_text(read_file(opt.file));
    MinorTable table = MinorTable::compute(m);
    bool sepr_req = opt.want_sepr || opt.want_all || (!opt.want_epr && !opt.want_pr);
    bool epr_req = opt.want_epr || opt.want_all;
    bool pr_req = opt.want_pr || opt.want_all;

    SeprSequence sepr = sepr_of(table);
    json out = json::object();
    std::string text;
    if (pr_req) {
        std::string s = pr_of(table, m.has_zero_diagonal_entry()).str();
        out["pr"] = s;
        text += opt.want_all ? "pr:   " + s + "\n" : s + "\n";
    }
    if (epr_req) {
        std::string s = epr_of(table).str();
        out["epr"] = s;
        text += opt.want_all ? "epr:  " + s + "\n" : s + "\n";
    }
    if (sepr_req) {
        out["sepr"] = sepr.str();
        text += opt.want_all ? "sepr: " + sepr.str() + "\n" : sepr.str() + "\n";
    }

    int rc = 0;
    if (opt.check_rules) {
        rules::Verdict v = catalog::classify(sepr, matrix_class_from_string(opt.cls));
        out["verdict"] = verdict_to_json(sepr.str(), v);
        if (v.unattainable()) {
            rc = 1;
            std::cerr << "computed sequence fires rules:";
            for (const auto& id : v.violations) std::cerr << " " << id;
            std::cerr << " (this indicates an arithmetic or rule-encoding bug)\n";
        }
    }
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text;
    return rc;
}

int run_rules(bool list, const std::string& explain, const std::string& check,
              const std::string& cls, bool as_json) {
    auto scope_name = [](rules::RuleScope s) {
        return s == rules::RuleScope::hermitian ? "hermitian"
               : s == rules::RuleScope::real_symmetric_only ? "real-symmetric-only"
                                                            : "order-3-only";
    };
    if (list) {
        if (as_json) {
            json arr = json::array();
            for (const auto& r : rules::rule_catalog())
                arr.push_back(json{{"id", r.id},
                                   {"scope", scope_name(r.scope)},
                                   {"pattern", r.pattern},
                                   {"citation", r.citation}});
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& r : rules::rule_catalog())
                std::cout << r.id << "\t" << r.pattern << "\n";
        }
        return 0;
    }
    if (!explain.empty()) {
        const rules::Rule* r = rules::find_rule(explain);
        if (!r) throw std::invalid_argument("unknown rule id '" + explain + "'");
        if (as_json) {
            std::cout << json{{"id", r->id},
                              {"scope", scope_name(r->scope)},
                              {"pattern", r->pattern},
                              {"citation", r->citation}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << r->id << " [" << scope_name(r->scope) << "]\n"
                      << "  pattern:  " << r->pattern << "\n"
                      << "  citation: " << r->citation << "\n";
        }
        return 0;
    }
    if (!check.empty()) {
        SeprSequence seq = SeprSequence::parse(check);
        rules::Verdict v = catalog::classify(seq, matrix_class_from_string(cls));
        if (as_json) {
            std::cout << verdict_to_json(seq.str(), v).dump(2) << "\n";
        } else {
            std::cout << seq.str() << ": " << rules::to_string(v.status);
            if (!v.violations.empty()) {
                std::cout << " (";
                for (std::size_t i = 0; i < v.violations.size(); ++i)
                    std::cout << (i ? " " : "") << v.violations[i];
                std::cout << ")";
            }
            if (v.witness_ref) std::cout << " witness: " << *v.witness_ref;
            std::cout << "\n";
        }
        return v.unattainable() ? 1 : 0;
    }
    throw std::invalid_argument("rules: pass --list, --explain <id> or --check <sequence>");
}

int run_enumerate(int order, const std::string& cls, int cap, bool as_json) {
    auto rep = search::enumerate_candidates(order, matrix_class_from_string(cls), cap);
    bool straggler_defect = order <= 3 && !rep.rule_clean_unwitnessed.empty();
    if (as_json) {
        json un = json::array();
        for (const auto& [seq, ids] : rep.unattainable)
            un.push_back(json{{"sequence", seq.str()}, {"violations", ids}});
        json att = json::array(), strag = json::array();
        for (const auto& s : rep.attainable) att.push_back(s.str());
        for (const auto& s : rep.rule_clean_unwitnessed) strag.push_back(s.str());
        json j{{"order", rep.n},
               {"class", std::string(to_string(rep.mode))},
               {"universe", rep.universe},
               {"attainable_witnessed", att},
               {"unattainable", un},
               {"rule_clean_unwitnessed", strag}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "order " << rep.n << ", class " << to_string(rep.mode) << "\n"
                  << "candidate universe: " << rep.universe << "\n"
                  << "attainable-witnessed: " << rep.attainable.size() << "\n"
                  << "unattainable: " << rep.unattainable.size() << "\n"
                  << "rule-clean-unwitnessed: " << rep.rule_clean_unwitnessed.size() << "\n";
        if (!rep.attainable.empty()) {
            std::cout << "attainable:";
            for (const auto& s : rep.attainable) std::cout << " " << s.str();
            std::cout << "\n";
        }
        for (const auto& s : rep.rule_clean_unwitnessed)
            std::cout << "unwitnessed: " << s.str() << "\n";
    }
    if (straggler_defect) {
        std::cerr << "rule-clean sequences without a catalog witness at order <= 3\n";
        return 1;
    }
    return 0;
}

int run_export_catalog() {
    json arr = json::array();
    for (const auto& e : catalog::entries()) {
        arr.push_back(json{{"label", e.label.str()},
                           {"order", e.matrix.order()},
                           {"construction", e.construction},
                           {"real", e.matrix.is_real()},
                           {"matrix", json::parse(matrix_to_json_text(e.matrix))}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
}

int run_verify_tables(const std::string& table, bool as_json) {
    int order = 0;
    if (table == "1")
        order = 2;  // the order-2 table
    else if (table == "2")
        order = 3;  // the order-3 table
    else if (table != "all")
        throw std::invalid_argument("verify-tables: --table must be 1, 2 or all");
    auto rep = catalog::verify_catalog(order);
    std::string counts = table == "all" ? "3 + 13 + 65" : std::to_string(rep.entries_checked);
    if (as_json) {
        json j{{"entries_checked", rep.entries_checked}, {"mismatches", rep.mismatches}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << counts << " entries verified, " << rep.mismatches.size() << " mismatches\n";
    }
    for (const auto& m : rep.mismatches) std::cerr << "mismatch: " << m << "\n";
    return rep.ok() ? 0 : 1;
}

int run_check_identities(int order, std::uint64_t trials, std::uint64_t seed, int bound,
                         long long radicand, const std::string& cls, const std::string& entries,
                         int den_max, bool inheritance, bool as_json) {
    search::GenSpec spec;
    spec.n = order;
    spec.kind = search::entry_kind_from_string(entries);
    spec.bound = bound;
    spec.den_max = den_max;
    spec.cls = matrix_class_from_string(cls);
    spec.radicand = radicand;
    spec.seed = seed;

    // aggregate case counts and the first failure per check across all trials
    std::vector<search::CheckItem> agg;
    auto fold = [&agg](const search::CheckReport& rep, std::uint64_t trial) {
        for (const auto& item : rep.items) {
            auto it = std::find_if(agg.begin(), agg.end(),
                                   [&item](const search::CheckItem& a) { return a.name == item.name; });
            if (it == agg.end()) {
                agg.push_back(item);
                if (item.failure)
                    agg.back().failure = "trial " + std::to_string(trial) + ": " + *item.failure;
            } else {
                it->cases += item.cases;
                if (item.failure && !it->failure)
                    it->failure = "trial " + std::to_string(trial) + ": " + *item.failure;
            }
        }
    };

    auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < trials; ++i) {
        HermitianMatrix m = search::random_hermitian(spec, i);
        fold(search::check_identities(m), i);
        if (inheritance) fold(search::check_inheritance(m), i);
        // computed sequences must never trip the rule engine
        rules::Verdict v = rules::check_sequence(sepr_of(MinorTable::compute(m)), spec.cls);
        search::CheckReport sound;
        search::CheckItem item{"rule-soundness", 1, std::nullopt};
        if (v.unattainable()) {
            std::string ids;
            for (const auto& id : v.violations) ids += " " + id;
            item.failure = "fired" + ids;
        }
        sound.items.push_back(std::move(item));
        fold(sound, i);
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    search::CheckReport total;
    total.items = agg;
    if (as_json) {
        json j{{"order", order},           {"trials", trials},
               {"seed", seed},             {"elapsed_ms", ms.count()},
               {"checks", check_report_to_json(total)}, {"all_pass", total.all_pass()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << trials << " matrices of order " << order << " (" << to_string(spec.cls) << ", "
                  << to_string(spec.kind) << " entries, radicand " << radicand << "), " << ms.count()
                  << " ms\n"
                  << total.summary();
        std::cout << (total.all_pass() ? "all identities hold\n" : "FAILURES FOUND\n");
    }
    return total.all_pass() ? 0 : 1;
}

int run_search(const std::string& target, int order, std::uint64_t budget, std::uint64_t seed,
               int bound, long long radicand, const std::string& cls, const std::string& entries,
               int den_max, bool exhaustive, bool as_json) {
    SeprSequence want = SeprSequence::parse(target);
    search::GenSpec spec;
    spec.n = order;
    spec.kind = search::entry_kind_from_string(entries);
    spec.bound = bound;
    spec.den_max = den_max;
    spec.cls = matrix_class_from_string(cls);
    spec.radicand = radicand;
    spec.seed = seed;

    auto found = search::search_witness(want, spec, budget, exhaustive);
    if (as_json) {
        json j{{"target", want.str()}, {"found", found.has_value()}};
        if (found) j["matrix"] = json::parse(matrix_to_json_text(*found));
        std::cout << j.dump(2) << "\n";
    } else if (found) {
        std::cout << matrix_to_json_text(*found, 2) << "\n";
    }
    if (!found) {
        std::cerr << "no witness for " << want.str() << " found within budget " << budget
                  << " (absence proves nothing)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic sepr-sequence toolkit for Hermitian matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "compute pr/epr/sepr sequences of a matrix file");
    compute->add_option("file", copt.file, "matrix JSON file")->required();
    compute->add_flag("--sepr", copt.want_sepr, "print the sepr-sequence (default)");
    compute->add_flag("--epr", copt.want_epr, "print the epr-sequence");
    compute->add_flag("--pr", copt.want_pr, "print the pr-sequence");
    compute->add_flag("--all", copt.want_all, "print pr, epr and sepr");
    compute->add_flag("--check-rules", copt.check_rules, "also judge the computed sepr-sequence");
    compute->add_option("--class", copt.cls, "matrix class for --check-rules")
        ->check(CLI::IsMember({"hermitian", "real-symmetric"}));

    bool rlist = false;
    std::string rexplain, rcheck, rcls = "hermitian";
    auto* rulescmd = app.add_subcommand("rules", "list, explain or apply the prohibition rules");
    rulescmd->add_flag("--list", rlist, "list all rules");
    rulescmd->add_option("--explain", rexplain, "print one rule in full");
    rulescmd->add_option("--check", rcheck, "judge a candidate sepr-sequence");
    rulescmd->add_option("--class", rcls, "matrix class")
        ->check(CLI::IsMember({"hermitian", "real-symmetric"}));

    int eorder = 0, ecap = 6;
    std::string ecls = "hermitian";
    auto* enumerate = app.add_subcommand("enumerate", "screen all candidate sequences of an order");
    enumerate->add_option("--order", eorder, "sequence length")->required();
    enumerate->add_option("--class", ecls, "matrix class")
        ->check(CLI::IsMember({"hermitian", "real-symmetric"}));
    enumerate->add_option("--cap", ecap, "largest order accepted");

    std::string vtable = "all";
    bool vexport = false;
    auto* verify = app.add_subcommand("verify-tables", "recompute every catalog witness");
    verify->add_option("--table", vtable, "1 (order 2), 2 (order 3) or all");
    verify->add_flag("--export", vexport, "dump the witness catalog as JSON instead");

    int iorder = 3, ibound = 2, iden = 2;
    std::uint64_t itrials = 100, iseed = 0;
    long long irad = 0;
    std::string icls = "hermitian", ientries = "rational";
    bool iinherit = false;
    auto* identities =
        app.add_subcommand("check-identities", "fuzz the determinantal identities on random matrices");
    identities->add_option("--order", iorder, "matrix order")->required();
    identities->add_option("--trials", itrials, "number of matrices")->required();
    identities->add_option("--seed", iseed, "generator seed");
    identities->add_option("--entry-bound", ibound, "entry magnitude bound");
    identities->add_option("--radicand", irad, "square-free radicand (0 = rational)");
    identities->add_option("--class", icls, "matrix class")
        ->check(CLI::IsMember({"hermitian", "real-symmetric"}));
    identities->add_option("--entries", ientries, "entry domain")
        ->check(CLI::IsMember({"integer", "gaussian", "rational"}));
    identities->add_option("--den-max", iden, "largest denominator (rational entries)");
    identities->add_flag("--inheritance", iinherit, "also scan the inheritance statements");

    std::string starget, scls = "hermitian", sentries = "integer";
    int sorder = 0, sbound = 1, sden = 2;
    std::uint64_t sbudget = 10000, sseed = 0;
    long long srad = 0;
    bool sexh = false;
    auto* searchcmd = app.add_subcommand("search", "look for a witness matrix of a target sequence");
    searchcmd->add_option("--target", starget, "target sepr-sequence")->required();
    searchcmd->add_option("--order", sorder, "matrix order")->required();
    searchcmd->add_option("--budget", sbudget, "trial budget");
    searchcmd->add_option("--seed", sseed, "generator seed");
    searchcmd->add_option("--entries", sentries, "entry domain")
        ->check(CLI::IsMember({"integer", "gaussian", "rational"}));
    searchcmd->add_option("--entry-bound", sbound, "entry magnitude bound");
    searchcmd->add_option("--den-max", sden, "largest denominator (rational entries)");
    searchcmd->add_option("--radicand", srad, "square-free radicand (0 = rational)");
    searchcmd->add_option("--class", scls, "matrix class")
        ->check(CLI::IsMember({"hermitian", "real-symmetric"}));
    searchcmd->add_flag("--exhaustive", sexh, "walk the entry lattice instead of sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool as_json = format == "json";
    try {
        if (app.got_subcommand(compute)) return run_compute(copt, as_json);
        if (app.got_subcommand(rulescmd)) return run_rules(rlist, rexplain, rcheck, rcls, as_json);
        if (app.got_subcommand(enumerate)) return run_enumerate(eorder, ecls, ecap, as_json);
        if (app.got_subcommand(verify))
            return vexport ? run_export_catalog() : run_verify_tables(vtable, as_json);
        if (app.got_subcommand(identities))
            return run_check_identities(iorder, itrials, iseed, ibound, irad, icls, ientries, iden,
                                        iinherit, as_json);
        if (app.got_subcommand(searchcmd))
            return run_search(starget, sorder, sbudget, sseed, sbound, srad, scls, sentries, sden,
                              sexh, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
