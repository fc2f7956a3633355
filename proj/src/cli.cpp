#include "qtensor/cli.hpp"

#include "qtensor/core.hpp"
#include "qtensor/dihedral.hpp"
#include "qtensor/io.hpp"
#include "qtensor/present.hpp"
#include "qtensor/report.hpp"
#include "qtensor/tensor.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

namespace qtensor {

namespace {

// "2,3,0,1" or "2 3 0 1" -> involution candidate; goodness is checked by
// whatever consumes it.
GoodInvolution parse_inline_rho(const std::string& text) {
    std::string spaced = text;
    for (char& c : spaced)
        if (c == ',') c = ' ';
    std::istringstream in(spaced);
    GoodInvolution rho;
    int v = 0;
    while (in >> v) rho.rho.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("--rho wants integers, got: " + text);
    if (rho.rho.empty()) throw std::invalid_argument("--rho is empty");
    return rho;
}

// "a=0,b=1" -> images indexed like the presentation's generators; every
// generator must be assigned exactly once.
Assignment parse_assign(const std::string& text, const Presentation& p) {
    std::vector<int> images(p.generators.size(), -1);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--assign wants name=value pairs, got: " + item);
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        const auto strip = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
        };
        strip(name);
        strip(value);
        const int idx = p.generator_index(name);
        if (idx < 0) throw std::invalid_argument("--assign names unknown generator: " + name);
        if (images[static_cast<std::size_t>(idx)] != -1)
            throw std::invalid_argument("--assign repeats generator: " + name);
        try {
            std::size_t used = 0;
            images[static_cast<std::size_t>(idx)] = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("--assign wants an integer for " + name + ", got: " +
                                        value);
        }
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] == -1)
            throw std::invalid_argument("--assign misses generator: " + p.generators[i]);
    return Assignment{std::move(images)};
}

void emit_json(std::ostream& out, const nlohmann::json& doc) {
    out << doc.dump(2) << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite quandle tensor products, quotients, and 1-handle classes"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string qdl_path;
    std::string qpres_path;
    std::vector<std::string> quotient_names;
    std::string rho_text;
    std::string assign_text;
    std::vector<std::string> pair_words;
    std::string kind = "strong";
    int max_n = 12;
    bool skip_doubles = false;
    long long cap = 10000000;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_rho = [&](CLI::App* sub) {
        sub->add_option("--rho", rho_text,
                        "inline involution, e.g. 2,3,0,1 (overrides the file's)");
    };

    CLI::App* cmd_check = app.add_subcommand("check", "validate a .qdl table");
    cmd_check->add_option("file", qdl_path, ".qdl file")->required();
    add_format(cmd_check);

    CLI::App* cmd_tensor =
        app.add_subcommand("tensor", "canonical tensor product classes");
    cmd_tensor->add_option("file", qdl_path, ".qdl file")->required();
    cmd_tensor
        ->add_option("--quotient", quotient_names,
                     "also quotient the classes; repeatable")
        ->check(CLI::IsMember({"tau", "rho", "tau,rho"}));
    add_rho(cmd_tensor);
    add_format(cmd_tensor);

    CLI::App* cmd_double =
        app.add_subcommand("double", "emit the symmetric double as a .qdl table");
    cmd_double->add_option("file", qdl_path, ".qdl file")->required();
    add_format(cmd_double);

    CLI::App* cmd_components =
        app.add_subcommand("components", "connected components of the carrier");
    cmd_components->add_option("file", qdl_path, ".qdl file")->required();
    add_format(cmd_components);

    CLI::App* cmd_verify = app.add_subcommand(
        "dihedral-verify", "closed-form dihedral results against the generic engine");
    cmd_verify->add_option("--max", max_n, "largest order to sweep")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--skip-doubles", skip_doubles,
                         "only check the base tensor results");
    add_format(cmd_verify);

    CLI::App* cmd_homs =
        app.add_subcommand("homs", "enumerate homs of a presentation into a table");
    cmd_homs->add_option("presentation", qpres_path, ".qpres file")->required();
    cmd_homs->add_option("file", qdl_path, ".qdl file")->required();
    cmd_homs->add_option("--cap", cap, "largest search space allowed")
        ->check(CLI::PositiveNumber);
    add_format(cmd_homs);

    CLI::App* cmd_invariant = app.add_subcommand(
        "invariant", "tensor class of a word pair under an assignment");
    cmd_invariant->add_option("presentation", qpres_path, ".qpres file")->required();
    cmd_invariant->add_option("file", qdl_path, ".qdl file")->required();
    cmd_invariant->add_option("--assign", assign_text, "generator images, e.g. a=0,b=1")
        ->required();
    cmd_invariant->add_option("--pair", pair_words, "the two words")
        ->expected(2)
        ->required();
    cmd_invariant->add_option("--kind", kind, "strong or weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    add_rho(cmd_invariant);
    add_format(cmd_invariant);

    CLI::App* cmd_handles =
        app.add_subcommand("handles", "1-handle class counts and inventories");
    cmd_handles->add_option("file", qdl_path, ".qdl file")->required();
    add_rho(cmd_handles);
    add_format(cmd_handles);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qtensor");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool json = format == "json";
    const auto file_rho = [&](const QdlFile& f) -> std::optional<GoodInvolution> {
        if (!rho_text.empty()) return parse_inline_rho(rho_text);
        return f.involution;
    };

    try {
        if (cmd_check->parsed()) {
            const QdlFile f = load_qdl_file(qdl_path);
            if (json) {
                nlohmann::json doc = quandle_document(f.quandle, f.involution);
                doc["valid"] = true;
                emit_json(out, doc);
            } else {
                out << "valid quandle, order " << f.quandle.n << "\n";
                if (f.involution) out << "good involution present\n";
            }
        } else if (cmd_tensor->parsed()) {
            const QdlFile f = load_qdl_file(qdl_path);
            const auto rho = file_rho(f);
            const TensorProduct t = tensor_product(f.quandle);
            if (json)
                emit_json(out, tensor_document(t, rho, quotient_names));
            else
                print_tensor_document(out, t, rho, quotient_names);
        } else if (cmd_double->parsed()) {
            const QdlFile f = load_qdl_file(qdl_path);
            const SymmetricQuandle d = symmetric_double(f.quandle);
            if (json)
                emit_json(out, quandle_document(d.quandle, d.rho));
            else
                write_qdl(out, d.quandle, d.rho);
        } else if (cmd_components->parsed()) {
            const QdlFile f = load_qdl_file(qdl_path);
            const auto comps = connected_components(f.quandle);
            if (json) {
                nlohmann::json doc;
                doc["n"] = f.quandle.n;
                doc["components"] = comps;
                emit_json(out, doc);
            } else {
                out << "components " << comps.size() << "\n";
                for (std::size_t i = 0; i < comps.size(); ++i) {
                    out << "  " << i << "  {";
                    for (std::size_t j = 0; j < comps[i].size(); ++j)
                        out << (j ? ", " : "") << comps[i][j];
                    out << "}\n";
                }
            }
        } else if (cmd_verify->parsed()) {
            std::vector<CrossCheckReport> reports;
            reports.reserve(static_cast<std::size_t>(max_n));
            bool all_ok = true;
            for (int n = 1; n <= max_n; ++n) {
                reports.push_back(cross_check(n, !skip_doubles));
                all_ok = all_ok && reports.back().ok;
            }
            if (json) {
                emit_json(out, cross_check_document(reports));
            } else {
                for (const CrossCheckReport& rep : reports) print_cross_check(out, rep);
                out << (all_ok ? "all comparisons ok" : "MISMATCHES FOUND") << "\n";
            }
            return all_ok ? 0 : 1;
        } else if (cmd_homs->parsed()) {
            const Presentation p = read_qpres_file(qpres_path);
            const QdlFile f = load_qdl_file(qdl_path);
            const auto homs = enumerate_homs(p, f.quandle, cap);
            if (json) {
                nlohmann::json doc;
                doc["count"] = homs.size();
                doc["generators"] = p.generators;
                nlohmann::json arr = nlohmann::json::array();
                for (const Assignment& a : homs) arr.push_back(a.images);
                doc["assignments"] = std::move(arr);
                emit_json(out, doc);
            } else {
                out << "homs " << homs.size() << "\n";
                for (const Assignment& a : homs) {
                    out << " ";
                    for (std::size_t i = 0; i < a.images.size(); ++i)
                        out << " " << p.generators[i] << "=" << a.images[i];
                    out << "\n";
                }
            }
        } else if (cmd_invariant->parsed()) {
            const Presentation p = read_qpres_file(qpres_path);
            const QdlFile f = load_qdl_file(qdl_path);
            const Assignment a = parse_assign(assign_text, p);
            const ExprPtr w1 = parse_word(pair_words[0], p, "<pair[0]>");
            const ExprPtr w2 = parse_word(pair_words[1], p, "<pair[1]>");
            const HandleKind hk =
                kind == "strong" ? HandleKind::Strong : HandleKind::Weak;
            const HandleClass h =
                handle_invariant(p, a, f.quandle, *w1, *w2, hk, file_rho(f));
            if (json) {
                nlohmann::json doc;
                doc["kind"] = kind;
                doc["evaluated"] =
                    nlohmann::json::array({h.evaluated.first, h.evaluated.second});
                doc["index"] = h.index;
                doc["label"] = h.label;
                nlohmann::json reps = nlohmann::json::array();
                for (const auto& r : h.class_reps)
                    reps.push_back(nlohmann::json::array({r.first, r.second}));
                doc["class_reps"] = std::move(reps);
                emit_json(out, doc);
            } else {
                out << "kind " << kind << "\n";
                out << "evaluated " << format_pair(h.evaluated) << "\n";
                out << "index " << h.index << "\n";
                out << "label " << h.label << "\n";
                out << "reps {";
                for (std::size_t i = 0; i < h.class_reps.size(); ++i)
                    out << (i ? ", " : "") << format_pair(h.class_reps[i]);
                out << "}\n";
            }
        } else if (cmd_handles->parsed()) {
            const QdlFile f = load_qdl_file(qdl_path);
            const HandleReport r = handle_report(f.quandle, file_rho(f));
            if (json)
                emit_json(out, handles_document(r));
            else
                print_handles_document(out, r);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qtensor
