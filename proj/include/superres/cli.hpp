#pragma once

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superres/verify.hpp"

namespace superres::cli {

using nlohmann::json;

namespace detail {

inline long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw usage_error("value too large for the CLI output: " + v.str());
    return v.convert_to<long long>();
}

inline json degree_json(const GrowthReport::ClassInfo& ci) {
    if (ci.status == SeqStatus::NotPoly) return json("not-polynomial");
    return json(ci.degree);
}

inline json report_common(const GrowthReport& rep) {
    json j;
    j["degrees"] = {{"even", degree_json(rep.even_d)}, {"odd", degree_json(rep.odd_d)}};
    j["window"] = {rep.window_lo, rep.window_hi};
    j["flags"] = rep.flags;
    return j;
}

inline json term_json(const ResolutionTerm& t) {
    json j;
    j["d"] = t.d;
    json arr = json::array();
    for (const auto& s : t.summands) arr.push_back({{"label", s.label}, {"mult", to_ll(s.mult)}});
    j["summands"] = arr;
    j["dim_lower"] = int_str(t.dim_lower);
    j["dim_upper"] = int_str(t.dim_upper);
    j["count"] = to_ll(t.count);
    if (t.external) j["provenance"] = "external";
    return j;
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

inline void emit_table(std::ostream& out, const json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object() || v.is_array()) emit_table(out, v, key);
            else out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) {
            std::string key = prefix + "[" + std::to_string(i++) + "]";
            if (v.is_object() || v.is_array()) emit_table(out, v, key);
            else out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

struct Selectors {
    std::string family;
    int n = 0;
    int p = 0, q = 0;
    long long k = 0;
    std::string table_path;
    std::string module = "simple";
    long long label = 0;
    std::shared_ptr<const F4Table> table;

    void load_table_if_given() {
        if (table_path.empty()) return;
        std::ifstream in(table_path);
        if (!in) throw usage_error("cannot open table file '" + table_path + "'");
        table = std::make_shared<F4Table>(f4_table_load(in));
    }

    Family make_family() const {
        if (family == "osp2") {
            if (n < 1) throw usage_error("--family osp2 requires --n");
            return Family::osp2(n);
        }
        if (family == "osp32") return Family::osp32();
        if (family == "d21a") {
            if (p < 1 || q < 1) throw usage_error("--family d21a requires --p and --q");
            return Family::d21a(p, q);
        }
        if (family == "g3") return Family::g3();
        if (family == "f4") return Family::f4();
        throw usage_error("unknown family '" + family + "'");
    }

    ModuleDescriptor make_descriptor() const {
        Family fam = make_family();
        bool simple = module == "simple";
        if (!simple && module != "kac") throw usage_error("--module must be simple or kac");
        switch (fam.tag) {
            case FamilyTag::Osp2_2n:
                return simple ? ModuleDescriptor::simple_principal(fam.n, label)
                              : ModuleDescriptor::kac_principal(fam.n, label);
            case FamilyTag::Osp3_2:
                if (!simple) throw usage_error("Kac modules are supported for osp2 only");
                return ModuleDescriptor::osp32_simple(label);
            case FamilyTag::D21a:
                if (!simple) throw usage_error("Kac modules are supported for osp2 only");
                return ModuleDescriptor::d21a_simple(fam, k, label);
            case FamilyTag::G3:
                if (!simple) throw usage_error("Kac modules are supported for osp2 only");
                return ModuleDescriptor::g3_simple(k, label);
            case FamilyTag::F4:
                if (!simple) throw usage_error("Kac modules are supported for osp2 only");
                if (!table) throw usage_error("--family f4 requires --table");
                return ModuleDescriptor::f4_simple(table, label);
        }
        throw internal_error("unreachable family");
    }
};

inline std::vector<Int> parse_csv_ints(const std::string& s) {
    std::vector<Int> out;
    std::string_view rest = s;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        out.push_back(parse_int(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (out.empty()) throw usage_error("empty coordinate list");
    return out;
}

inline EvenRootSystem parse_system(const std::string& s) {
    if (s == "a1") return EvenRootSystem::a1();
    if (s == "g2") return EvenRootSystem::g2();
    if (s == "b3") return EvenRootSystem::b3();
    if (s.rfind("c:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(s.substr(2));
        } catch (const std::exception&) {
            throw usage_error("bad system '" + s + "'");
        }
        return EvenRootSystem::c(n);
    }
    throw usage_error("unknown system '" + s + "' (expected a1, c:N, g2, b3)");
}

} // namespace detail

/// Runs one command.  Exit status: 0 success, 2 usage error, 3 inconsistency
/// error, 4 verification-suite failure.  Errors are single-line JSON objects
/// {"code":int,"error":...} on the error stream.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact block combinatorics, projective resolutions and complexity "
                 "invariants for classical Lie superalgebras"};
    app.name("superres");
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    detail::Selectors sel;
    std::string weight_text_arg;
    long long from = 0, to = 0, d_arg = 0;
    int dmin = 16, dmax = 256;
    std::string system_arg, hw_arg, kind = "simple", suite = "all";
    int atypical_flag = 1;

    auto add_weight_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("--family", sel.family)->required()->check(CLI::IsMember({"osp2"}));
        c->add_option("--n", sel.n)->required();
        c->add_option("--weight", weight_text_arg)->required();
        return c;
    };

    CLI::App* atyp = add_weight_cmd("atyp", "atypicality degree and witness roots");
    CLI::App* fcoords = add_weight_cmd("fcoords", "f-coordinates of a dominant weight");
    CLI::App* diagram = add_weight_cmd("diagram", "weight diagram and its core");
    CLI::App* lop = add_weight_cmd("lop", "apply the L-operator");
    CLI::App* linv = add_weight_cmd("linv", "apply the inverse L-operator");
    CLI::App* orbit = add_weight_cmd("orbit", "iterated L-orbit of a weight");
    orbit->add_option("--from", from)->required();
    orbit->add_option("--to", to)->required();

    CLI::App* dim = app.add_subcommand("dim", "Weyl dimension over an even root system");
    dim->add_option("--system", system_arg)->required();
    dim->add_option("--hw", hw_arg)->required();

    CLI::App* kacdim = app.add_subcommand("kacdim", "Kac module dimension over osp(2|2n)");
    kacdim->add_option("--n", sel.n)->required();
    kacdim->add_option("--weight", weight_text_arg)->required();

    auto add_selectors = [&](CLI::App* c) {
        c->add_option("--family", sel.family)
            ->required()
            ->check(CLI::IsMember({"osp2", "osp32", "d21a", "g3", "f4"}));
        c->add_option("--n", sel.n);
        c->add_option("--p", sel.p);
        c->add_option("--q", sel.q);
        c->add_option("--k", sel.k);
        c->add_option("--table", sel.table_path);
        c->add_option("--module", sel.module)->check(CLI::IsMember({"simple", "kac"}));
        c->add_option("--label", sel.label);
    };

    CLI::App* resolve = app.add_subcommand("resolve", "one minimal projective resolution term");
    add_selectors(resolve);
    resolve->add_option("--d", d_arg)->required();

    CLI::App* complexity_cmd = app.add_subcommand("complexity", "rate of growth of term dimensions");
    add_selectors(complexity_cmd);
    complexity_cmd->add_option("--dmin", dmin);
    complexity_cmd->add_option("--dmax", dmax);

    CLI::App* zcomplexity_cmd =
        app.add_subcommand("zcomplexity", "rate of growth of term summand counts");
    add_selectors(zcomplexity_cmd);
    zcomplexity_cmd->add_option("--dmin", dmin);
    zcomplexity_cmd->add_option("--dmax", dmax);

    CLI::App* geom = app.add_subcommand("geom", "variety dimensions and geometric identities");
    geom->add_option("--family", sel.family)
        ->required()
        ->check(CLI::IsMember({"osp2", "osp32", "d21a", "g3", "f4"}));
    geom->add_option("--n", sel.n);
    geom->add_option("--p", sel.p);
    geom->add_option("--q", sel.q);
    geom->add_option("--table", sel.table_path);
    geom->add_option("--kind", kind)->check(CLI::IsMember({"simple", "kac"}));
    geom->add_option("--atypical", atypical_flag)->check(CLI::Range(0, 1));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"lemma31", "lemma32", "blocks", "oracle", "counts", "geometry",
                               "all"}));
    verify_cmd->add_option("--table", sel.table_path);

    // let the global --format appear after subcommand arguments
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<const char*> argv;
    static const std::string prog = "superres";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());

    auto emit = [&](const json& j) {
        if (format == "table") detail::emit_table(out, j);
        else detail::emit_json(out, j);
    };
    auto fail = [&](int code, const std::string& msg) {
        json j;
        j["code"] = code;
        j["error"] = msg;
        err << j.dump() << "\n";
        return code;
    };

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            throw usage_error(e.what());
        }

        if (*atyp || *fcoords || *diagram || *lop || *linv || *orbit || *kacdim) {
            Family fam = Family::osp2(sel.n);
            RootDatum dat = build_datum(fam);
            SuperWeight w = parse_weight(fam, weight_text_arg);
            if (*atyp) {
                Atypicality at = atypicality(dat, w);
                json j;
                j["degree"] = at.degree;
                j["witnesses"] = at.witness_labels;
                emit(j);
            } else if (*fcoords) {
                FCoords fc = f_coords(dat, w);
                json j;
                j["f_minus1"] = rat_str(fc.f_minus1);
                json arr = json::array();
                for (const Int& f : fc.f) arr.push_back(detail::to_ll(f));
                j["f"] = arr;
                emit(j);
            } else if (*diagram) {
                WeightDiagram wd = weight_diagram(f_coords(dat, w));
                json j;
                j["diagram"] = diagram_text(wd);
                j["core"] = core(wd);
                emit(j);
            } else if (*lop) {
                json j;
                j["result"] = weight_text(l_op(dat, w).weight);
                emit(j);
            } else if (*linv) {
                json j;
                j["result"] = weight_text(l_inv(dat, w));
                emit(j);
            } else if (*orbit) {
                if (from > to) throw usage_error("--from must be <= --to");
                json arr = json::array();
                SuperWeight cur = l_power(dat, w, Int(from));
                for (long long i = from;; ++i) {
                    arr.push_back({{"l", i}, {"weight", weight_text(cur)}});
                    if (i == to) break;
                    cur = l_op(dat, cur).weight;
                }
                json j;
                j["orbit"] = arr;
                emit(j);
            } else { // kacdim
                json j;
                j["dim"] = int_str(kac_dim(sel.n, w));
                emit(j);
            }
            return 0;
        }

        if (*dim) {
            EvenRootSystem sys = detail::parse_system(system_arg);
            json j;
            j["dim"] = int_str(weyl_dim(sys, detail::parse_csv_ints(hw_arg)));
            emit(j);
            return 0;
        }

        if (*resolve) {
            sel.load_table_if_given();
            ModuleDescriptor desc = sel.make_descriptor();
            if (d_arg < 0 || d_arg > 1000000) throw usage_error("--d out of range [0, 1000000]");
            ResolutionTerm t = term(desc, static_cast<int>(d_arg));
            if (format == "csv") {
                out << "d,dim_lower,dim_upper,count\n"
                    << t.d << "," << int_str(t.dim_lower) << "," << int_str(t.dim_upper) << ","
                    << int_str(t.count) << "\n";
            } else {
                emit(detail::term_json(t));
            }
            return 0;
        }

        if (*complexity_cmd || *zcomplexity_cmd) {
            sel.load_table_if_given();
            ModuleDescriptor desc = sel.make_descriptor();
            GrowthWindow w{dmin, dmax};
            if (format == "csv") {
                auto terms = resolution_terms(desc, w.dmax);
                out << "d,dim_lower,dim_upper,count\n";
                for (int d = w.dmin; d <= w.dmax; ++d) {
                    const auto& t = terms[static_cast<std::size_t>(d)];
                    out << d << "," << int_str(t.dim_lower) << "," << int_str(t.dim_upper) << ","
                        << int_str(t.count) << "\n";
                }
                return 0;
            }
            if (*complexity_cmd) {
                GrowthReport rep = complexity_report(desc, w);
                json j = detail::report_common(rep);
                j["c"] = rep.c;
                j["const_min"] = rat_str(rep.const_min);
                j["const_max"] = rat_str(rep.const_max);
                emit(j);
            } else {
                GrowthReport rep = z_report(desc, w);
                json j = detail::report_common(rep);
                j["z"] = rep.c;
                emit(j);
            }
            return 0;
        }

        if (*geom) {
            sel.load_table_if_given();
            Family fam = sel.make_family();
            ModuleKind mk = kind == "kac" ? ModuleKind::Kac : ModuleKind::Simple;
            GeomReport g = geometric_report(fam, mk, atypical_flag == 1, sel.table);
            json j;
            j["kind"] = kind;
            j["atypical"] = atypical_flag;
            j["c"] = g.c;
            j["z"] = g.z;
            j["dim_X"] = g.dims.dim_X;
            j["dim_V"] = g.dims.dim_V;
            j["dim_Vf"] = g.dims.dim_Vf;
            j["alpha"] = g.dims.alpha;
            j["identity_c"] = g.identity_c;
            j["identity_z"] = g.identity_z;
            if (g.external) j["provenance"] = "external";
            emit(j);
            return 0;
        }

        if (*verify_cmd) {
            sel.load_table_if_given();
            auto results = superres::verify::run_suite(suite, sel.table);
            bool pass = true;
            json arr = json::array();
            for (const auto& r : results) {
                pass = pass && r.pass;
                arr.push_back({{"id", r.id},
                               {"name", r.name},
                               {"note", r.note},
                               {"pass", r.pass},
                               {"skipped", r.skipped}});
            }
            json j;
            j["suite"] = suite;
            j["pass"] = pass;
            j["results"] = arr;
            emit(j);
            return pass ? 0 : 4;
        }

        throw usage_error("no subcommand given");
    } catch (const usage_error& e) {
        return fail(2, e.what());
    } catch (const inconsistency_error& e) {
        return fail(3, e.what());
    } catch (const internal_error& e) {
        return fail(1, std::string("internal error: ") + e.what());
    } catch (const std::exception& e) {
        return fail(1, e.what());
    }
}

} // namespace superres::cli
