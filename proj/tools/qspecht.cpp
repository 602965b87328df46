// qspecht: command-line front end for the classifier, the survey driver and the homomorphism checks.
#include "qspecht/criteria.hpp"
#include "qspecht/homcalc.hpp"
#include "qspecht/mainhom.hpp"
#include "qspecht/store.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>

using namespace qs;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_arg(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

void check_char(int p) {
    if (p != 0 && !is_prime(p)) throw InputError("characteristic must be 0 or a prime");
}

StraightenOptions options_from(long budget) {
    StraightenOptions o;
    if (budget > 0) o.budget = budget;
    return o;
}

json witness_details(const Partition& p) {
    json d = json::object();
    Partition c = conjugate(p);
    for (auto [name, q] : {std::pair<const char*, Partition>{"MH", p}, {"MHConjugate", c}})
        if (auto m = mh_parameters(q))
            d[name] = {{"x", m->x}, {"s", m->s}, {"s_prime", m->s_prime}, {"f", m->f}, {"g", m->g},
                       {"mu", mh_target_mu(q, m->x).parts()}};
    for (auto [name, q] : {std::pair<const char*, Partition>{"LLT", p}, {"LLTConjugate", c}})
        if (is_llt_reducible(q)) {
            auto w = llt_witness_pair(q);
            d[name] = {{"case", w.case_no},
                       {"mu", w.mu.parts()},
                       {"mu_tilde", w.mu_tilde.parts()},
                       {"n_mu", n_statistic(q, w.mu)},
                       {"n_mu_tilde", n_statistic(q, w.mu_tilde)}};
        }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reducibility of Specht modules for Hecke algebras at q = -1"};
    app.require_subcommand(1);

    std::string ptext, ltext, mtext, cache;
    int ch = 0, n = 0;
    bool details = false, cancellations = false;
    long budget = 0;
    MHParams mp;

    auto* classify_cmd = app.add_subcommand("classify", "classify one partition");
    classify_cmd->add_option("partition", ptext, "e.g. 4,4,2 or 3,2^3")->required();
    classify_cmd->add_option("--char", ch, "characteristic: 0 or a prime");
    classify_cmd->add_flag("--witnesses", details, "add MH and LLT witness data");

    auto* survey_cmd = app.add_subcommand("survey", "classify every partition of n (JSONL)");
    survey_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    survey_cmd->add_option("--char", ch, "characteristic: 0 or a prime");
    survey_cmd->add_option("--cache", cache, "append-only JSONL cache");

    auto* mh_cmd = app.add_subcommand("verify-mainhom", "check the explicit homomorphism for (s,s',f,g)");
    mh_cmd->add_option("--s", mp.s)->required();
    mh_cmd->add_option("--sp", mp.s_prime)->required();
    mh_cmd->add_option("--f", mp.f)->required();
    mh_cmd->add_option("--g", mp.g)->required();
    mh_cmd->add_flag("--cancellations", cancellations, "also check the intermediate cancellation identities");
    mh_cmd->add_option("--budget", budget, "straightening budget (overrides QSPECHT_BUDGET)");

    auto* nstat_cmd = app.add_subcommand("nstat", "N-statistic N(lambda, mu)");
    nstat_cmd->add_option("lambda", ltext)->required();
    nstat_cmd->add_option("mu", mtext)->required();

    auto* reg_cmd = app.add_subcommand("regularize", "2-regularization");
    reg_cmd->add_option("lambda", ltext)->required();

    auto* hd_cmd = app.add_subcommand("homdim", "dim EHom(S^mu, S^lambda) at q = -1");
    hd_cmd->add_option("mu", mtext)->required();
    hd_cmd->add_option("lambda", ltext)->required();
    hd_cmd->add_option("--budget", budget, "straightening budget (overrides QSPECHT_BUDGET)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            check_char(ch);
            Partition p = parse_arg(ptext);
            MemoStore store;
            json j = to_json(classify(p, ch, &store));
            if (details) j["witness_details"] = witness_details(p);
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*survey_cmd) {
            check_char(ch);
            auto t0 = std::chrono::steady_clock::now();
            MemoStore store;
            std::unique_ptr<JsonlCache> jc;
            int corrupt = 0;
            if (!cache.empty()) {
                jc = std::make_unique<JsonlCache>(cache);
                corrupt = jc->load(store);
            }
            std::map<std::string, long> counts;
            long records = 0, hits = 0;
            for_each_partition(n, [&](const Partition& p) {
                bool hit = store.get(p, ch).has_value();
                auto r = classify(p, ch, &store);
                if (hit) ++hits;
                else if (jc) jc->append(r);
                ++counts[to_string(r.verdict)];
                ++records;
                std::cout << to_json(r).dump() << "\n";
            });
            json s;
            s["n"] = n;
            s["char"] = ch;
            s["records"] = records;
            s["verdicts"] = counts;
            s["cache_hits"] = hits;
            s["cache_corrupt_lines"] = corrupt;
            s["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            std::cout << json{{"summary", s}}.dump() << "\n";
            if (jc)
                for (const auto& w : jc->warnings()) std::cerr << "warning: " << w << "\n";
            return 0;
        }
        if (*mh_cmd) {
            try {
                validate(mp);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            auto t0 = std::chrono::steady_clock::now();
            Straightener st(options_from(budget));
            try {
                auto rep = verify_mainhom(mp, st);
                json j = to_json(rep);
                bool ok = rep.verified();
                if (cancellations && is_odd_regime(mp)) {
                    auto c = verify_paper_cancellations(mp, st);
                    j["cancellations"] = to_json(c);
                    ok = ok && c.all_hold();
                }
                j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                std::cout << j.dump() << "\n";
                return ok ? 0 : 1;
            } catch (const BudgetExceeded& e) {
                std::cout << json{{"error", e.what()}, {"verified", false}}.dump() << "\n";
                return 1;
            }
        }
        if (*nstat_cmd) {
            Partition lam = parse_arg(ltext), mu = parse_arg(mtext);
            if (!alternating_in(mu, lam)) throw InputError("mu is not alternating in lambda");
            std::cout << json(n_statistic(lam, mu)).dump() << "\n";
            return 0;
        }
        if (*reg_cmd) {
            std::cout << to_json(regularize(parse_arg(ltext))).dump() << "\n";
            return 0;
        }
        if (*hd_cmd) {
            Partition mu = parse_arg(mtext), lam = parse_arg(ltext);
            if (mu.n() != lam.n()) throw InputError("mu and lambda have different sizes");
            Straightener st(options_from(budget));
            try {
                std::cout << json(ehom_specht_basis(mu, lam, st).dimension()).dump() << "\n";
            } catch (const BudgetExceeded& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
