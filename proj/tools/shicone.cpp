#include "shicone/det_engine.hpp"
#include "shicone/digraph.hpp"
#include "shicone/errors.hpp"
#include "shicone/oracle.hpp"
#include "shicone/path_count.hpp"
#include "shicone/root_system.hpp"
#include "shicone/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using shicone::Int;
using shicone::Poly;
using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string type;
    std::string format;
    std::string data;
    std::string out;
};

shicone::ConeCounter make_counter(const std::string& label, const std::string& data_path) {
    shicone::RootSystem sys = shicone::build_root_system(label);
    if (!data_path.empty()) {
        std::ifstream in(data_path);
        if (!in)
            throw shicone::MissingData("cannot read digraph data file: " + data_path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            shicone::ShiDigraph g = shicone::load_digraph_json(sys, ss.str());
            return shicone::ConeCounter(std::move(sys), std::move(g));
        } catch (const std::invalid_argument& e) {
            throw shicone::MissingData(std::string("digraph data unusable: ") + e.what());
        }
    }
    return shicone::ConeCounter(label);
}

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SHICONE_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw shicone::IoError("cannot open output file: " + out_path);
    out << text;
    if (!out) throw shicone::IoError("write failed: " + out_path);
}

std::string coeff_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += " ";
        s += shicone::to_string(p.coeff(i));
    }
    return s;
}

json coeff_json(const Poly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const Int& c : p.coeffs()) arr.push_back(shicone::to_string(c));
    return arr;
}

std::string root_list_text(const shicone::RootSystem& sys, const std::vector<int>& roots) {
    std::string s;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) s += " ";
        s += sys.root_label(roots[i]);
    }
    return s.empty() ? "(none)" : s;
}

int cmd_info(const CommonOpts& o) {
    shicone::RootSystem sys = shicone::build_root_system(o.type);
    std::ostringstream exps;
    for (std::size_t i = 0; i < sys.exponents.size(); ++i) {
        if (i) exps << " ";
        exps << sys.exponents[i];
    }
    if (o.format == "json") {
        json j;
        j["type"] = sys.label;
        j["rank"] = sys.rank;
        j["positive_roots"] = sys.num_positive();
        j["exponents"] = sys.exponents;
        j["coxeter_number"] = sys.coxeter_number;
        j["group_order"] = shicone::to_string(sys.weyl_order);
        j["catalan"] = shicone::to_string(sys.catalan);
        emit(j.dump(2) + "\n", o.out);
    } else {
        std::ostringstream os;
        os << "type: " << sys.label << "\n"
           << "rank: " << sys.rank << "\n"
           << "positive roots: " << sys.num_positive() << "\n"
           << "exponents: " << exps.str() << "\n"
           << "coxeter number: " << sys.coxeter_number << "\n"
           << "group order: " << sys.weyl_order << "\n"
           << "catalan number: " << sys.catalan << "\n";
        emit(os.str(), o.out);
    }
    return 0;
}

int cmd_count(const CommonOpts& o, const std::string& word_text, bool show_matrix) {
    shicone::ConeCounter counter = make_counter(o.type, o.data);
    const shicone::RootSystem& sys = counter.system();
    std::vector<int> word = shicone::parse_word(word_text, sys.rank);
    shicone::WeylElement w = shicone::element_of(sys, word);
    std::vector<int> roots = counter.canonical_roots(w);
    std::vector<shicone::PiEntry> pi = counter.forbidden_for_roots(roots);
    std::vector<std::vector<Int>> m = counter.count_matrix(pi);
    Int det = shicone::determinant<Int>(m);

    if (o.format == "json") {
        json j;
        j["type"] = sys.label;
        j["word"] = shicone::word_to_string(word);
        j["length"] = w.length();
        json rj = json::array();
        for (int r : roots) rj.push_back(sys.root_label(r));
        j["forbidden_roots"] = rj;
        j["count"] = shicone::to_string(det);
        if (show_matrix) {
            json mj = json::array();
            for (const auto& row : m) {
                json rowj = json::array();
                for (const Int& e : row) rowj.push_back(shicone::to_string(e));
                mj.push_back(rowj);
            }
            j["matrix"] = mj;
        }
        emit(j.dump(2) + "\n", o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "word,length,count\n"
           << "\"" << shicone::word_to_string(word) << "\"," << w.length() << "," << det
           << "\n";
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        os << "type: " << sys.label << "\n"
           << "word: " << shicone::word_to_string(word) << "\n"
           << "length: " << w.length() << "\n"
           << "forbidden roots: " << root_list_text(sys, roots) << "\n";
        if (show_matrix) {
            os << "matrix:\n";
            for (const auto& row : m) {
                os << "[";
                for (std::size_t c = 0; c < row.size(); ++c)
                    os << (c ? " " : "") << row[c];
                os << "]\n";
            }
        }
        os << "regions: " << det << "\n";
        emit(os.str(), o.out);
    }
    return 0;
}

int cmd_poincare(const CommonOpts& o, const std::string& word_text, bool show_matrix) {
    shicone::ConeCounter counter = make_counter(o.type, o.data);
    const shicone::RootSystem& sys = counter.system();
    std::vector<int> word = shicone::parse_word(word_text, sys.rank);
    shicone::WeylElement w = shicone::element_of(sys, word);
    std::vector<shicone::PiEntry> pi = counter.forbidden_for(w);
    std::vector<std::vector<Poly>> m = counter.poincare_matrix(pi);
    Poly det = shicone::determinant<Poly>(m);

    if (o.format == "json") {
        json j;
        j["type"] = sys.label;
        j["word"] = shicone::word_to_string(word);
        j["length"] = w.length();
        j["poincare"] = det.pretty();
        j["coefficients"] = coeff_json(det);
        j["count"] = shicone::to_string(det.eval(1));
        if (show_matrix) {
            json mj = json::array();
            for (const auto& row : m) {
                json rowj = json::array();
                for (const Poly& e : row) rowj.push_back(e.pretty());
                mj.push_back(rowj);
            }
            j["matrix"] = mj;
        }
        emit(j.dump(2) + "\n", o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "word,length,poincare_coeffs\n"
           << "\"" << shicone::word_to_string(word) << "\"," << w.length() << ",\""
           << coeff_text(det) << "\"\n";
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        os << "type: " << sys.label << "\n"
           << "word: " << shicone::word_to_string(word) << "\n"
           << "length: " << w.length() << "\n";
        if (show_matrix) {
            os << "matrix:\n";
            for (const auto& row : m) {
                os << "[";
                for (std::size_t c = 0; c < row.size(); ++c)
                    os << (c ? ", " : "") << row[c].pretty();
                os << "]\n";
            }
        }
        os << "poincare: " << det.pretty() << "\n"
           << "coefficients: " << coeff_text(det) << "\n";
        emit(os.str(), o.out);
    }
    return 0;
}

int cmd_table(const CommonOpts& o, bool with_poincare, int workers, long long max_order) {
    shicone::ConeCounter counter = make_counter(o.type, o.data);
    shicone::ConeTable table =
        shicone::all_cones_table(counter, with_poincare, resolve_workers(workers), max_order);

    if (o.format == "json") {
        json j;
        j["type"] = counter.system().label;
        json rows = json::array();
        for (const auto& r : table.rows) {
            json row;
            row["word"] = shicone::word_to_string(r.word);
            row["length"] = r.length;
            row["count"] = shicone::to_string(r.count);
            if (with_poincare) row["poincare_coeffs"] = coeff_json(r.poincare);
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["total"] = shicone::to_string(table.total);
        emit(j.dump(2) + "\n", o.out);
    } else if (o.format == "plain") {
        std::ostringstream os;
        std::size_t wcol = 4;
        for (const auto& r : table.rows)
            wcol = std::max(wcol, shicone::word_to_string(r.word).size());
        os << std::left;
        for (const auto& r : table.rows) {
            std::string ws = shicone::word_to_string(r.word);
            os << ws << std::string(wcol - ws.size() + 2, ' ') << r.length << "\t" << r.count;
            if (with_poincare) os << "\t" << r.poincare.pretty();
            os << "\n";
        }
        os << "total" << std::string(wcol > 5 ? wcol - 5 + 2 : 2, ' ') << "\t" << table.total
           << "\n";
        emit(os.str(), o.out);
    } else { // csv (default)
        std::ostringstream os;
        os << "word,length,count";
        if (with_poincare) os << ",poincare_coeffs";
        os << "\n";
        for (const auto& r : table.rows) {
            os << "\"" << shicone::word_to_string(r.word) << "\"," << r.length << ","
               << r.count;
            if (with_poincare) os << ",\"" << coeff_text(r.poincare) << "\"";
            os << "\n";
        }
        os << "total,," << table.total << "\n";
        emit(os.str(), o.out);
    }
    return 0;
}

struct VerifyOne {
    std::string word;
    std::vector<std::string> values; // "name=value" per method
    bool ok = true;
};

VerifyOne verify_element(const shicone::RootSystem& sys,
                         const std::optional<shicone::ConeCounter>& counter,
                         const shicone::WeylElement& w, const std::vector<int>& word,
                         bool oracle_only) {
    VerifyOne res;
    res.word = shicone::word_to_string(word);
    std::vector<Int> values;
    auto record = [&](const std::string& name, const Int& v) {
        values.push_back(v);
        res.values.push_back(name + "=" + shicone::to_string(v));
    };

    std::vector<int> nw = shicone::inverse_inversion_set(w);
    if (counter && !oracle_only) record("determinant", counter->count(w));
    std::vector<char> excluded(sys.num_positive(), 0);
    for (int r : nw) excluded[r] = 1;
    record("antichains", shicone::count_antichains(sys, excluded).total);
    if (counter) {
        std::vector<shicone::PathSeq> forbidden;
        for (const shicone::PiEntry& e : counter->forbidden_for(w))
            forbidden.push_back({e.corner.bl, e.corner.br, e.corner.tr});
        record("paths", shicone::count_avoiding_paths(counter->digraph(), forbidden).total);
    } else if (w.length() == 0) {
        record("catalan", sys.catalan); // closed form, independent of the oracle
    }
    for (const Int& v : values)
        if (v != values.front()) res.ok = false;
    return res;
}

int cmd_verify(const CommonOpts& o, const std::string& word_text, bool all, bool oracle_only,
               long long max_order) {
    shicone::RootSystem sys = shicone::build_root_system(o.type);
    std::optional<shicone::ConeCounter> counter;
    try {
        counter.emplace(make_counter(o.type, o.data));
    } catch (const shicone::MissingData&) {
        if (!oracle_only) throw;
    }

    std::ostringstream os;
    bool all_ok = true;
    auto run_one = [&](const shicone::WeylElement& w, const std::vector<int>& word) {
        VerifyOne r = verify_element(sys, counter, w, word, oracle_only);
        if (!r.ok) all_ok = false;
        os << sys.label << " w='" << r.word << "':";
        for (const std::string& v : r.values) os << " " << v;
        if (r.values.size() < 2) os << " (single method, nothing to cross-check)";
        os << (r.ok ? " OK" : " MISMATCH") << "\n";
    };

    if (all) {
        shicone::GroupEnumeration ge = shicone::enumerate_group(sys, max_order);
        for (std::size_t i = 0; i < ge.elements.size(); ++i)
            run_one(ge.elements[i], ge.word_of(static_cast<int>(i)));
        os << "verified " << ge.elements.size() << " cones\n";
    } else {
        std::vector<int> word = shicone::parse_word(word_text, sys.rank);
        run_one(shicone::element_of(sys, word), word);
    }
    emit(os.str(), o.out);
    if (!all_ok) throw shicone::VerificationFailure("independent counts disagree");
    return 0;
}

int cmd_digraph(const CommonOpts& o) {
    shicone::ConeCounter counter = make_counter(o.type, o.data);
    const std::string text = (o.format == "json")
                                 ? shicone::export_digraph_json(counter.system(), counter.digraph())
                                 : shicone::export_digraph_dot(counter.system(), counter.digraph());
    emit(text, o.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact region counts of linear-hyperplane deformations inside Weyl cones"};
    app.require_subcommand(1);

    CommonOpts info_o, count_o, poin_o, table_o, verify_o, digraph_o;
    std::string count_word, poin_word, verify_word;
    bool count_matrix = false, poin_matrix = false;
    bool table_poincare = false, verify_all = false, verify_oracle_only = false;
    int table_workers = 0;
    long long table_cap = 1000000, verify_cap = 1000000;

    auto add_common = [](CLI::App* sub, CommonOpts& o, const char* fmt_default,
                         const std::vector<std::string>& fmts) {
        sub->add_option("type", o.type, "root system label, e.g. A3, B4, C3, D5, E6, F4, G2")
            ->required();
        o.format = fmt_default;
        sub->add_option("--format", o.format, std::string("output format (default ") +
                                                  fmt_default + ")")
            ->check(CLI::IsMember(fmts));
        sub->add_option("--data", o.data, "digraph description file (JSON), for types "
                                          "without a built-in construction");
        sub->add_option("--out", o.out, "write output to this file instead of stdout");
    };

    CLI::App* s_info = app.add_subcommand("info", "print root system invariants");
    add_common(s_info, info_o, "plain", {"plain", "json"});

    CLI::App* s_count = app.add_subcommand("count", "count regions inside one Weyl cone");
    add_common(s_count, count_o, "plain", {"plain", "json", "csv"});
    s_count->add_option("--word", count_word,
                        "word in simple reflections, e.g. \"1 2\" (default: identity)");
    s_count->add_flag("--show-matrix", count_matrix, "also print the determinant matrix");

    CLI::App* s_poin = app.add_subcommand("poincare",
                                          "corner-graded region polynomial of one cone");
    add_common(s_poin, poin_o, "plain", {"plain", "json", "csv"});
    s_poin->add_option("--word", poin_word, "word in simple reflections (default: identity)");
    s_poin->add_flag("--show-matrix", poin_matrix, "also print the polynomial matrix");

    CLI::App* s_table = app.add_subcommand("table", "counts for every cone of the group");
    add_common(s_table, table_o, "csv", {"plain", "json", "csv"});
    s_table->add_flag("--poincare", table_poincare, "add the graded polynomial per cone");
    s_table->add_option("--workers", table_workers,
                        "worker threads (default: SHICONE_WORKERS or hardware)");
    s_table->add_option("--max-group-order", table_cap,
                        "refuse groups larger than this (default 1000000)");

    CLI::App* s_verify = app.add_subcommand(
        "verify", "cross-check determinant counts against brute-force oracles");
    add_common(s_verify, verify_o, "plain", {"plain"});
    s_verify->add_option("--word", verify_word, "verify a single cone (default: identity)");
    s_verify->add_flag("--all", verify_all, "verify every cone of the group");
    s_verify->add_flag("--oracle-only", verify_oracle_only,
                       "skip the determinant, compare oracles only");
    s_verify->add_option("--max-group-order", verify_cap,
                         "cap for --all enumeration (default 1000000)");

    CLI::App* s_digraph = app.add_subcommand("digraph", "emit the counting digraph");
    add_common(s_digraph, digraph_o, "dot", {"dot", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (s_info->parsed()) return cmd_info(info_o);
        if (s_count->parsed()) return cmd_count(count_o, count_word, count_matrix);
        if (s_poin->parsed()) return cmd_poincare(poin_o, poin_word, poin_matrix);
        if (s_table->parsed())
            return cmd_table(table_o, table_poincare, table_workers, table_cap);
        if (s_verify->parsed())
            return cmd_verify(verify_o, verify_word, verify_all, verify_oracle_only,
                              verify_cap);
        if (s_digraph->parsed()) return cmd_digraph(digraph_o);
        std::cerr << "usage error: no subcommand selected\n";
        return 2;
    } catch (const shicone::MissingData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const shicone::VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const shicone::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const shicone::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 6;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
