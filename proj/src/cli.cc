#include <ccs/cli.hh>
#include <ccs/constructions.hh>
#include <ccs/document.hh>
#include <ccs/feasibility.hh>
#include <ccs/ham_base.hh>
#include <ccs/verifier.hh>

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

using std::int64_t;
using std::optional;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    namespace
    {
        auto ham_options(const string & cache_flag, double budget_seconds) -> HamOptions
        {
            HamOptions options;
            options.budget = std::chrono::milliseconds(int64_t(budget_seconds * 1000));
            if (! cache_flag.empty())
                options.cache_path = cache_flag;
            else if (auto env = std::getenv("CCS_CACHE"); env && *env)
                options.cache_path = env;
            return options;
        }

        auto print_verdict(ostream & out, const FeasibilityVerdict & v, bool explain) -> void
        {
            out << "feasible: " << (v.feasible ? "true" : "false") << "\n";
            out << "clause: " << v.clause << " (" << v.reason << ")\n";
            if (explain)
                out << "parity: " << v.parity.describe() << "\n";
        }

        template <typename List, typename Show>
        auto print_some(ostream & out, const char * title, const List & list, Show show) -> void
        {
            if (list.empty())
                return;
            out << title << " (" << list.size() << "):\n";
            size_t shown = 0;
            for (auto & item : list) {
                if (++shown > 20) {
                    out << "  ...\n";
                    break;
                }
                out << "  " << show(item) << "\n";
            }
        }

        auto edge_text(const Edge & e) -> string
        {
            return "{" + to_string(e.a) + "," + to_string(e.b) + "}";
        }

        auto owners_text(const vector<size_t> & owners) -> string
        {
            string s;
            for (auto o : owners)
                s += (s.empty() ? "" : ",") + to_string(o);
            return s;
        }

        auto print_report(ostream & out, const VerificationReport & r) -> void
        {
            out << r.summary() << "\n";
            print_some(out, "missing_edges", r.missing_edges, edge_text);
            print_some(out, "duplicate_edges", r.duplicate_edges, [](const EdgeIssue & e) {
                return edge_text(e.edge) + " ×" + to_string(e.count) + " from base cycles " + owners_text(e.base_cycles);
            });
            print_some(out, "foreign_edges", r.foreign_edges, [](const EdgeIssue & e) {
                return edge_text(e.edge) + " from base cycles " + owners_text(e.base_cycles);
            });
            print_some(out, "non_simple_cycles", r.non_simple_cycles,
                [](const CycleIssue & c) { return "base cycle " + to_string(c.base_cycle) + ": " + c.detail; });
            print_some(out, "lemma21_failures", r.lemma21_failures, [](const PropertyIssue & p) {
                return "base cycle " + to_string(p.base_cycle) + " property (" + to_string(p.property) + "): " + p.detail;
            });
            print_some(out, "minimality_violations", r.minimality_violations, [](const MinimalityIssue & v) {
                return "base cycles " + to_string(v.first) + " and " + to_string(v.second) + " are translates";
            });
        }

        enum class Cell
        {
            Infeasible,
            Feasible,
            Verified,
            Failed,
            Limited
        };

        auto glyph(Cell c) -> const char *
        {
            switch (c) {
                case Cell::Infeasible: return "✗";
                case Cell::Feasible: return "✓";
                case Cell::Verified: return "✓";
                case Cell::Failed: return "!";
                case Cell::Limited: return "?";
            }
            return " ";
        }

        auto read_file(const string & path) -> optional<string>
        {
            std::ifstream in(path);
            if (! in)
                return std::nullopt;
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        auto cmd_generate(int m, int t, bool expand, const string & out_path, const HamOptions & options, ostream & out,
            ostream & err) -> int
        {
            auto params = Params::make(m, t);
            try {
                auto x = dispatch(params, options);
                auto text = render_document(x, expand);
                if (out_path.empty())
                    out << text;
                else {
                    std::ofstream file(out_path);
                    if (! (file << text)) {
                        err << "error: cannot write " << out_path << "\n";
                        return exit_usage;
                    }
                }
                return exit_ok;
            }
            catch (const InfeasibleError & e) {
                err << "no cyclic " << m << "-cycle system of K_" << params.n() << " − I exists\n";
                print_verdict(err, e.verdict, true);
                return exit_negative;
            }
            catch (const ResourceError & e) {
                err << "resource limit: " << e.what() << "\n";
                return exit_resource;
            }
        }

        auto cmd_verify(const string & path, ostream & out, ostream & err) -> int
        {
            auto text = read_file(path);
            if (! text) {
                err << "error: cannot read " << path << "\n";
                return exit_usage;
            }
            GeneratingSet x = [&] {
                try {
                    return parse_document(*text);
                }
                catch (const DocumentError & e) {
                    throw CLI::ValidationError("document", e.what());
                }
            }();
            auto report = verify(x);
            print_report(out, report);
            return report.ok ? exit_ok : exit_negative;
        }

        auto cmd_table(int m_max, int t_max, bool check, const HamOptions & options, unsigned jobs, ostream & out) -> int
        {
            vector<int> ms;
            for (int m = 4; m <= m_max; m += 2)
                ms.push_back(m);
            vector<Cell> cells(ms.size() * t_max, Cell::Infeasible);
            vector<string> notes(cells.size());
            vector<size_t> todo;
            for (size_t r = 0; r < ms.size(); ++r)
                for (int t = 1; t <= t_max; ++t)
                    if (feasible(Params::make(ms[r], t)).feasible) {
                        cells[r * t_max + t - 1] = Cell::Feasible;
                        todo.push_back(r * t_max + t - 1);
                    }

            if (check) {
                std::atomic<size_t> next{0};
                auto work = [&] {
                    for (size_t i; (i = next++) < todo.size();) {
                        auto cell = todo[i];
                        int m = ms[cell / t_max], t = int(cell % t_max) + 1;
                        try {
                            dispatch(Params::make(m, t), options);
                            cells[cell] = Cell::Verified;
                        }
                        catch (const ResourceError & e) {
                            cells[cell] = Cell::Limited;
                            notes[cell] = e.what();
                        }
                        catch (const std::exception & e) {
                            cells[cell] = Cell::Failed;
                            notes[cell] = e.what();
                        }
                    }
                };
                vector<std::thread> pool;
                for (unsigned j = 0; j < std::max(1u, jobs); ++j)
                    pool.emplace_back(work);
                for (auto & th : pool)
                    th.join();
            }

            out << "m \\ t ";
            for (int t = 1; t <= t_max; ++t)
                out << std::setw(3) << t;
            out << "\n";
            for (size_t r = 0; r < ms.size(); ++r) {
                string label = "m=" + to_string(ms[r]);
                out << label << string(label.size() < 6 ? 6 - label.size() : 1, ' ');
                for (int t = 1; t <= t_max; ++t)
                    out << "  " << glyph(cells[r * t_max + t - 1]);
                out << "\n";
            }

            if (! check)
                return exit_ok;
            size_t verified = 0, failed = 0, limited = 0;
            for (size_t i = 0; i < cells.size(); ++i) {
                verified += cells[i] == Cell::Verified;
                failed += cells[i] == Cell::Failed;
                limited += cells[i] == Cell::Limited;
                if (! notes[i].empty())
                    out << (cells[i] == Cell::Failed ? "FAILED" : "LIMITED") << " (m, t) = (" << ms[i / t_max] << ", "
                        << i % t_max + 1 << "): " << notes[i] << "\n";
            }
            out << "checked " << todo.size() << " feasible cells: " << verified << " verified, " << failed << " failed, "
                << limited << " resource-limited\n";
            return failed ? exit_negative : limited ? exit_resource : exit_ok;
        }

        auto cmd_search(int m, int64_t n, int64_t bound, ostream & out, ostream & err) -> int
        {
            try {
                auto result = exhaustive_search(m, n, bound);
                if (! result.exists()) {
                    out << "none: no cyclic " << m << "-cycle system of K_" << n << " − I (" << result.nodes
                        << " search nodes)\n";
                    return exit_negative;
                }
                out << render_document(*result.witness);
                return exit_ok;
            }
            catch (const ResourceError & e) {
                err << "resource limit: " << e.what() << "\n";
                return exit_resource;
            }
        }
    }

    auto run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Cyclic m-cycle systems of K_{mt} − I: construct, verify, and decide existence."};
        app.require_subcommand(1);

        int m = 0, t = 0, m_max = 0, t_max = 0;
        int64_t n = 0, bound = default_exhaustive_bound;
        bool expand = false, explain = false, check = false;
        string out_path, doc_path, cache;
        double budget = 60;
        unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

        auto gen = app.add_subcommand("generate", "Build and verify a minimum generating set");
        gen->add_option("-m", m, "cycle length (even, ≥ 4)")->required();
        gen->add_option("-t", t, "n = m·t")->required();
        gen->add_flag("--expand", expand, "include every cycle of the system");
        gen->add_option("-o", out_path, "output file (default: stdout)");
        gen->add_option("--cache", cache, "hamiltonian base cache file (overrides CCS_CACHE)");
        gen->add_option("--budget", budget, "hamiltonian base search budget in seconds")->check(CLI::PositiveNumber);

        auto ver = app.add_subcommand("verify", "Verify a system document");
        ver->add_option("file", doc_path, "JSON document")->required();

        auto fea = app.add_subcommand("feasible", "Decide whether a cyclic system exists");
        fea->add_option("-m", m, "cycle length (even, ≥ 4)")->required();
        fea->add_option("-t", t, "n = m·t")->required();
        fea->add_flag("--explain", explain, "show the parity derivation");

        auto tab = app.add_subcommand("table", "Existence table over even m ≤ m-max and t ≤ t-max");
        tab->add_option("--m-max", m_max)->required()->check(CLI::Range(4, 10000));
        tab->add_option("--t-max", t_max)->required()->check(CLI::Range(1, 10000));
        tab->add_flag("--check", check, "construct and verify every feasible cell");
        tab->add_option("--jobs", jobs, "worker threads for --check")->check(CLI::Range(1u, 1024u));
        tab->add_option("--cache", cache, "hamiltonian base cache file (overrides CCS_CACHE)");
        tab->add_option("--budget", budget, "hamiltonian base search budget in seconds")->check(CLI::PositiveNumber);

        auto sea = app.add_subcommand("search", "Exhaustive search for a cyclic m-cycle system of K_n − I");
        sea->add_option("-m", m, "cycle length")->required();
        sea->add_option("-n", n, "order")->required();
        sea->add_option("--bound", bound, "largest n searched")->check(CLI::PositiveNumber);

        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (*gen)
                return cmd_generate(m, t, expand, out_path, ham_options(cache, budget), out, err);
            if (*ver)
                return cmd_verify(doc_path, out, err);
            if (*fea) {
                auto v = feasible(Params::make(m, t));
                print_verdict(out, v, explain);
                return v.feasible ? exit_ok : exit_negative;
            }
            if (*tab)
                return cmd_table(m_max, t_max, check, ham_options(cache, budget), jobs, out);
            if (*sea)
                return cmd_search(m, n, bound, out, err);
        }
        catch (const CLI::ValidationError & e) {
            err << "validation error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const DomainError & e) {
            err << "usage error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const ResourceError & e) {
            err << "resource limit: " << e.what() << "\n";
            return exit_resource;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return exit_negative;
        }
        return exit_usage;
    }
}
