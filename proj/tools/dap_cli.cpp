// Command-line front end. Subcommands map one-to-one onto library calls;
// all heavy lifting lives in the headers so the binary stays a thin shell.
//
// Exit codes: 0 on success, 1 when a verification (or an internal consistency
// assertion) fails, 2 on usage errors such as unparseable input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "dap/dap.hpp"

namespace {

struct Config {
    int max_n = 18;
    int series_order = 64;
    std::string cache_dir;
    std::string output_format = "json";
    int thread_count = 0;

    void validate() const {
        if (max_n < 2) throw dap::validation_error("--max-n must be at least 2");
        if (series_order < 4) throw dap::validation_error("--order must be at least 4");
        if (output_format != "json" && output_format != "csv" && output_format != "plain")
            throw dap::validation_error("--format must be json, csv, or plain");
    }
};

// Each command renders its result three ways; emit picks the configured one.
void emit(const Config& cfg, const dap::json& j, const std::string& csv,
          const std::string& plain) {
    if (cfg.output_format == "json")
        std::cout << j.dump() << "\n";
    else if (cfg.output_format == "csv")
        std::cout << csv;
    else
        std::cout << plain;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_enumerate(const Config& cfg, const std::string& family, int n) {
    dap::FamilyId f = dap::parse_family(family);
    bool csv = cfg.output_format == "csv";
    bool json_lines = cfg.output_format == "json";
    if (csv) std::cout << "object\n";
    switch (dap::family_kind(f)) {
        case dap::ObjectKind::path:
            for (const auto& p : dap::enum_paths(f, n, cfg.max_n)) {
                if (json_lines)
                    std::cout << dap::path_to_json(p).dump() << "\n";
                else
                    std::cout << p.to_string() << "\n";
            }
            break;
        case dap::ObjectKind::word:
            for (const auto& w : dap::enum_words(f, n, cfg.max_n)) {
                if (json_lines)
                    std::cout << dap::word_to_json(w).dump() << "\n";
                else
                    std::cout << w.to_string() << "\n";
            }
            break;
        case dap::ObjectKind::meander:
            for (const auto& m : dap::enum_meanders(n, cfg.max_n)) {
                if (json_lines)
                    std::cout << dap::meander_to_json(m).dump() << "\n";
                else
                    std::cout << m.to_string() << "\n";
            }
            break;
    }
    return 0;
}

int cmd_count(const Config& cfg, const std::string& family, int n) {
    dap::FamilyId f = dap::parse_family(family);
    dap::ResultCache cache(cfg.cache_dir);
    std::string key = "count_" + std::string(dap::family_name(f)) + "_n" + std::to_string(n);
    dap::json payload;
    if (auto hit = cache.load(key)) {
        payload = *hit;
    } else {
        payload = {{"family", dap::family_name(f)},
                   {"n", n},
                   {"count", dap::count_family(f, n, cfg.max_n).str()}};
        cache.store(key, payload);
    }
    std::string count = payload["count"].get<std::string>();
    emit(cfg, payload,
         "family,n,count\n" + std::string(dap::family_name(f)) + "," + std::to_string(n) + "," +
             count + "\n",
         count + "\n");
    return 0;
}

int cmd_stat(const Config& cfg, const std::string& text, const std::string& stat_text) {
    dap::StatId sid = dap::parse_stat(stat_text);
    long value;
    if (dap::stat_on_words(sid.tag)) {
        dap::WordKind kind = text.find('W') == std::string::npos ? dap::WordKind::motzkin
                                                                 : dap::WordKind::grand;
        value = dap::stat(dap::MotzkinWord::parse(text, kind), sid);
    } else {
        value = dap::stat(dap::AirPocketPath::parse(text), sid);
    }
    std::string name = dap::stat_name(sid);
    emit(cfg, dap::json{{"object", text}, {"stat", name}, {"value", value}},
         "object,stat,value\n" + csv_quote(text) + "," + csv_quote(name) + "," +
             std::to_string(value) + "\n",
         std::to_string(value) + "\n");
    return 0;
}

int cmd_distribution(const Config& cfg, const std::string& family, int n,
                     const std::string& stat_text) {
    dap::FamilyId f = dap::parse_family(family);
    dap::StatId sid = dap::parse_stat(stat_text);
    dap::ResultCache cache(cfg.cache_dir);
    std::string key = "distribution_" + std::string(dap::family_name(f)) + "_n" +
                      std::to_string(n) + "_" + dap::stat_name(sid);
    dap::json payload;
    if (auto hit = cache.load(key)) {
        payload = *hit;
    } else {
        payload = dap::histogram_to_json(dap::distribution(f, n, sid, cfg.max_n));
        cache.store(key, payload);
    }
    std::string csv = "value,count\n", plain;
    for (const auto& [k, v] : payload.items()) {
        csv += k + "," + v.get<std::string>() + "\n";
        plain += k + " " + v.get<std::string>() + "\n";
    }
    emit(cfg, payload, csv, plain);
    return 0;
}

int cmd_popularity(const Config& cfg, const std::string& family, int n,
                   const std::string& stat_text) {
    dap::FamilyId f = dap::parse_family(family);
    dap::StatId sid = dap::parse_stat(stat_text);
    dap::ResultCache cache(cfg.cache_dir);
    std::string key = "popularity_" + std::string(dap::family_name(f)) + "_n" +
                      std::to_string(n) + "_" + dap::stat_name(sid);
    dap::json payload;
    if (auto hit = cache.load(key)) {
        payload = *hit;
    } else {
        payload = {{"family", dap::family_name(f)},
                   {"n", n},
                   {"stat", dap::stat_name(sid)},
                   {"popularity", dap::popularity(f, n, sid, cfg.max_n).str()}};
        cache.store(key, payload);
    }
    std::string total = payload["popularity"].get<std::string>();
    emit(cfg, payload,
         "family,n,stat,popularity\n" + std::string(dap::family_name(f)) + "," +
             std::to_string(n) + "," + csv_quote(dap::stat_name(sid)) + "," + total + "\n",
         total + "\n");
    return 0;
}

int cmd_series(const Config& cfg, const std::string& name, int k, int coeff) {
    dap::GfId id = dap::parse_gf(k > 0 ? name + "(" + std::to_string(k) + ")" : name);
    int order = cfg.series_order;
    dap::ResultCache cache(cfg.cache_dir);
    std::string key = "series_" + dap::gf_name(id) + "_order" + std::to_string(order);
    dap::json payload;
    if (auto hit = cache.load(key)) {
        payload = *hit;
    } else {
        switch (dap::gf_arity(id.tag)) {
            case dap::GfArity::univariate: payload = dap::series_to_json(dap::gf(id, order)); break;
            case dap::GfArity::bivariate:
                payload = dap::series_to_json(dap::gf_marked(id, order));
                break;
            case dap::GfArity::trivariate:
                payload = dap::series_to_json(dap::gf_marked2(id, order));
                break;
        }
        cache.store(key, payload);
    }
    if (coeff >= 0) {
        if (coeff > order) throw dap::domain_error("coefficient index exceeds the series order");
        dap::json one = payload[coeff];
        std::string plain = one.is_array() && one.size() == 2 && one[0].is_string()
                                ? one[0].get<std::string>() + "/" + one[1].get<std::string>()
                                : one.dump();
        emit(cfg, one, plain + "\n", plain + "\n");
        return 0;
    }
    std::string csv, plain;
    if (dap::gf_arity(id.tag) == dap::GfArity::univariate) {
        csv = "n,numerator,denominator\n";
        for (std::size_t i = 0; i < payload.size(); ++i) {
            csv += std::to_string(i) + "," + payload[i][0].get<std::string>() + "," +
                   payload[i][1].get<std::string>() + "\n";
            plain += payload[i][0].get<std::string>();
            if (payload[i][1].get<std::string>() != "1")
                plain += "/" + payload[i][1].get<std::string>();
            plain += "\n";
        }
    } else {
        csv = payload.dump() + "\n";  // nested marker polynomials don't flatten usefully
        plain = csv;
    }
    emit(cfg, payload, csv, plain);
    return 0;
}

int cmd_grading(const Config& cfg, const std::string& which) {
    dap::GradingId g = dap::parse_grading(which);
    int order = cfg.series_order;
    dap::ResultCache cache(cfg.cache_dir);
    std::string key = "grading_" + which + "_order" + std::to_string(order);
    dap::json payload;
    if (auto hit = cache.load(key)) {
        payload = *hit;
    } else {
        payload = dap::series_to_json(dap::graded_by_updegree(g, order));
        cache.store(key, payload);
    }
    std::string csv = "m,count\n", plain;
    for (std::size_t i = 0; i < payload.size(); ++i) {
        csv += std::to_string(i) + "," + payload[i][0].get<std::string>() + "\n";
        plain += payload[i][0].get<std::string>() + "\n";
    }
    emit(cfg, payload, csv, plain);
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite_text) {
    dap::VerifySuite suite = dap::parse_verify_suite(suite_text);
    dap::VerifyOptions opt{cfg.max_n, cfg.series_order, cfg.thread_count};
    std::vector<dap::CheckResult> results = dap::run_verify(suite, opt);
    bool all_pass = true;
    dap::json report = dap::json::array();
    std::string csv = "name,bound,pass,witness\n", plain;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        dap::json item{{"name", r.name}, {"bound", r.bound}, {"pass", r.pass}};
        if (!r.pass) item["witness"] = r.witness;
        report.push_back(std::move(item));
        csv += csv_quote(r.name) + "," + csv_quote(r.bound) + "," + (r.pass ? "true" : "false") +
               "," + csv_quote(r.witness) + "\n";
        plain += (r.pass ? "PASS " + r.name : "FAIL " + r.name + ": " + r.witness) + "\n";
    }
    emit(cfg, report, csv, plain);
    return all_pass ? 0 : 1;
}

int cmd_render(const Config& cfg, const std::string& text, const std::string& style) {
    if (style != "ascii" && style != "svg")
        throw dap::validation_error("--style must be ascii or svg");
    std::string doc;
    if (text.find_first_of("LR") != std::string::npos) {
        dap::MeanderWord m = dap::MeanderWord::parse(text);
        doc = style == "svg" ? dap::render_meander_svg(m) : dap::render_meander_ascii(m);
    } else {
        dap::AirPocketPath p = dap::AirPocketPath::parse(text);
        doc = style == "svg" ? dap::render_path_svg(p) : dap::render_path_ascii(p);
    }
    (void)cfg;  // documents are format-independent
    std::cout << doc;
    return 0;
}

int cmd_oeis(const Config& cfg, const std::string& id, const std::string& bfile,
             long bfile_offset) {
    dap::OeisReport rep;
    if (bfile.empty()) {
        rep = dap::compare_embedded(id, cfg.max_n);
    } else {
        std::ifstream in(bfile);
        if (!in) throw dap::validation_error("cannot open b-file '" + bfile + "'");
        rep = dap::compare_bfile(id, in, bfile_offset, cfg.max_n);
        rep.source = bfile;
    }
    dap::json j{{"id", rep.id},
                {"source", rep.source},
                {"compared", rep.compared},
                {"match", rep.match}};
    if (!rep.match) {
        j["first_disagreement"] = rep.first_disagreement;
        j["expected"] = rep.expected;
        j["actual"] = rep.actual;
    }
    std::string plain = rep.match
                            ? "match (" + std::to_string(rep.compared) + " terms)\n"
                            : "mismatch at index " + std::to_string(rep.first_disagreement) +
                                  ": expected " + rep.expected + ", computed " + rep.actual + "\n";
    emit(cfg, j,
         "id,compared,match\n" + rep.id + "," + std::to_string(rep.compared) + "," +
             (rep.match ? "true" : "false") + "\n",
         plain);
    return rep.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyck paths with air pockets: enumeration, statistics, series, verification"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--max-n", cfg.max_n, "largest object size enumeration may touch");
    app.add_option("--order", cfg.series_order, "series truncation order");
    app.add_option("--format", cfg.output_format, "output format: json | csv | plain");
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory (caching off when empty)");
    app.add_option("--threads", cfg.thread_count, "verify worker threads (0 = all cores)");

    std::string family, text, stat_text, gf_text, grading_text = "catalan";
    std::string suite = "all", style = "ascii", oeis_id, bfile;
    int n = 0, gf_k = 0, coeff = -1;
    long bfile_offset = -1;

    CLI::App* c_enum = app.add_subcommand("enumerate", "list every object of a family");
    c_enum->add_option("family", family)->required();
    c_enum->add_option("n", n)->required();

    CLI::App* c_count = app.add_subcommand("count", "count a family");
    c_count->add_option("family", family)->required();
    c_count->add_option("n", n)->required();

    CLI::App* c_stat = app.add_subcommand("stat", "evaluate one statistic on one object");
    c_stat->add_option("object", text)->required();
    c_stat->add_option("stat", stat_text)->required();

    CLI::App* c_dist = app.add_subcommand("distribution", "histogram of a statistic over a family");
    c_dist->add_option("family", family)->required();
    c_dist->add_option("n", n)->required();
    c_dist->add_option("stat", stat_text)->required();

    CLI::App* c_pop = app.add_subcommand("popularity", "total of a statistic over a family");
    c_pop->add_option("family", family)->required();
    c_pop->add_option("n", n)->required();
    c_pop->add_option("stat", stat_text)->required();

    CLI::App* c_series = app.add_subcommand("series", "truncated series of a generating function");
    c_series->add_option("id", gf_text)->required();
    c_series->add_option("k", gf_k, "parameter for ids that take one");
    c_series->add_option("--coeff", coeff, "print a single coefficient");

    CLI::App* c_grading = app.add_subcommand("grading", "census by up-step count");
    c_grading->add_option("which", grading_text, "catalan | riordan")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite, "all | bijections | series | tables | asymptotics");

    CLI::App* c_render = app.add_subcommand("render", "draw a path or meander word");
    c_render->add_option("object", text)->required();
    c_render->add_option("--style", style, "ascii | svg");

    CLI::App* c_oeis = app.add_subcommand("oeis", "compare a sequence against its fixture");
    c_oeis->add_option("id", oeis_id)->required();
    c_oeis->add_option("--bfile", bfile, "compare against a local b-file instead");
    c_oeis->add_option("--bfile-offset", bfile_offset,
                       "rebase the first b-file line to this index");

    for (CLI::App* sub : {c_enum, c_count, c_stat, c_dist, c_pop, c_series, c_grading, c_verify,
                          c_render, c_oeis})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        cfg.validate();
        if (*c_enum) return cmd_enumerate(cfg, family, n);
        if (*c_count) return cmd_count(cfg, family, n);
        if (*c_stat) return cmd_stat(cfg, text, stat_text);
        if (*c_dist) return cmd_distribution(cfg, family, n, stat_text);
        if (*c_pop) return cmd_popularity(cfg, family, n, stat_text);
        if (*c_series) return cmd_series(cfg, gf_text, gf_k, coeff);
        if (*c_grading) return cmd_grading(cfg, grading_text);
        if (*c_verify) return cmd_verify(cfg, suite);
        if (*c_render) return cmd_render(cfg, text, style);
        if (*c_oeis) return cmd_oeis(cfg, oeis_id, bfile, bfile_offset);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dap::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const dap::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
