#include "pmd/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmd/io.hpp"
#include "pmd/svg.hpp"

namespace pmd {

namespace {

using nlohmann::json;

PersistenceModule load(const std::string& path) { return parse_module(read_text_file(path)); }

std::vector<int> support_of(const PersistenceModule& M) {
    std::vector<int> s;
    for (int x = 0; x < M.poset->size; ++x)
        if (M.dims[x] > 0) s.push_back(x);
    return s;
}

std::string id_span(const std::vector<int>& s) {
    if (s.empty()) return "{}";
    bool contiguous = true;
    for (size_t i = 1; i < s.size(); ++i) contiguous = contiguous && s[i] == s[i - 1] + 1;
    if (contiguous) return "[" + std::to_string(s.front()) + ", " + std::to_string(s.back()) + "]";
    std::string r = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) r += ", ";
        r += std::to_string(s[i]);
    }
    return r + "}";
}

std::string coord_bbox(const std::vector<int>& carrier, const FinitePoset& P) {
    int imin = 1 << 30, imax = -1, jmin = 1 << 30, jmax = -1;
    for (int x : carrier) {
        auto [i, j] = P.coords[x];
        imin = std::min(imin, i);
        imax = std::max(imax, i);
        jmin = std::min(jmin, j);
        jmax = std::max(jmax, j);
    }
    std::ostringstream ss;
    ss << "[" << imin << "," << jmin << "]..[" << imax << "," << jmax << "]";
    return ss.str();
}

std::string type_names(const std::vector<BlockType>& ts) {
    std::string r;
    for (BlockType t : ts) {
        if (!r.empty()) r += "/";
        r += block_type_name(t);
    }
    return r;
}

void print_barcode(std::ostream& out, const Barcode& bc) {
    int total = 0;
    for (const Bar& b : bc.bars) {
        out << "  " << id_span(b.carrier) << " x" << b.multiplicity << "\n";
        total += b.multiplicity;
    }
    out << "bars: " << total << " (" << bc.bars.size() << " distinct)\n";
}

void print_blocks(std::ostream& out, const BlockList& bl, const FinitePoset& P) {
    int total = 0;
    for (const BlockEntry& e : bl.blocks) {
        out << "  " << type_names(e.types) << " " << coord_bbox(e.carrier, P) << " x"
            << e.multiplicity << "\n";
        total += e.multiplicity;
    }
    out << "blocks: " << total << " (" << bl.blocks.size() << " distinct)\n";
}

// Sum of embedding*projection over all summands must be the identity at every
// element; anything else disproves the decomposition it just reported.
void check_reassembly(const Decomposition& D) {
    const PersistenceModule& M = D.original;
    for (int x = 0; x < M.poset->size; ++x) {
        Matrix sum(M.dims[x], M.dims[x]);
        for (const Summand& s : D.summands)
            sum = mat_add(M.field, sum,
                          mat_mul(M.field, s.embedding.comps[x], s.projection.comps[x]));
        if (!sum.is_identity())
            throw Counterexample("reassembly failed: embeddings and projections do not sum "
                                 "to the identity at element " +
                                 std::to_string(x));
    }
}

json decompose_report(const Decomposition& D, std::uint64_t seed) {
    json rep;
    rep["command"] = "decompose";
    rep["field_char"] = D.original.field.p;
    rep["seed"] = seed;
    rep["summands"] = json::array();
    for (const Summand& s : D.summands) {
        json j;
        j["support"] = support_of(s.module);
        j["dims"] = s.module.dims;
        j["certificate"] = {
            {"kind", s.certificate.kind == CertificateKind::EndDimOne ? "end_dim_one"
                                                                      : "heuristic_exhausted"},
            {"trials", s.certificate.trials},
        };
        rep["summands"].push_back(j);
    }
    return rep;
}

int cmd_validate(const std::string& file, std::ostream& out) {
    PersistenceModule M = load(file);
    out << "ok: " << M.poset->size << " elements, " << M.poset->covers.size()
        << " covers, total dim " << total_dim(M) << " over F_" << M.field.p << "\n";
    return 0;
}

int cmd_decompose(const std::string& file, std::uint64_t seed, const std::string& json_out,
                  std::ostream& out) {
    PersistenceModule M = load(file);
    try {
        Decomposition D = decompose(M, seed);
        check_reassembly(D);
        out << "module: " << M.poset->size << " elements, total dim " << total_dim(M)
            << ", field F_" << M.field.p << "\n";
        out << "summands: " << D.summands.size() << " (seed " << seed << ")\n";
        int k = 0;
        for (const Summand& s : D.summands) {
            out << "  " << ++k << ": support " << id_span(support_of(s.module)) << ", dims";
            for (int x : support_of(s.module)) out << " " << s.module.dims[x];
            if (s.certificate.kind == CertificateKind::EndDimOne)
                out << ", certificate end-dim-one\n";
            else
                out << ", certificate heuristic(" << s.certificate.trials << " trials)\n";
        }
        out << "reassembly: identity recovered from embeddings and projections\n";
        if (!json_out.empty())
            write_text_file(json_out, decompose_report(D, seed).dump(2) + "\n");
        return 0;
    } catch (const Counterexample& e) {
        if (!json_out.empty()) {
            json rep;
            rep["command"] = "decompose";
            rep["field_char"] = M.field.p;
            rep["seed"] = seed;
            rep["counterexample"] = e.what();
            write_text_file(json_out, rep.dump(2) + "\n");
        }
        throw;
    }
}

int cmd_barcode(const std::string& file, std::ostream& out) {
    PersistenceModule M = load(file);
    Barcode bc = barcode_chain(M);
    out << "barcode of a chain with " << M.poset->size << " points over F_" << M.field.p << "\n";
    print_barcode(out, bc);
    return 0;
}

BlockList blocks_of(const PersistenceModule& M, std::uint64_t seed) {
    if (M.poset->kind == ShapeKind::Grid) return block_decompose(M, seed);
    if (M.poset->kind == ShapeKind::Triangle) return verify_triangle_blocks(M, seed);
    throw NotGridLike("block decomposition needs a grid or triangle module");
}

int cmd_blocks(const std::string& file, std::uint64_t seed, std::ostream& out) {
    PersistenceModule M = load(file);
    BlockList bl = blocks_of(M, seed);
    out << "block decomposition over F_" << M.field.p << " (seed " << seed << ")\n";
    print_blocks(out, bl, *M.poset);
    return 0;
}

int cmd_middle_exact(const std::string& file, std::ostream& out) {
    PersistenceModule M = load(file);
    MiddleExactReport rep = check_middle_exact(M);
    out << "unit squares: " << rep.squares.size() << "\n";
    out << "middle exact: " << (rep.ok ? "yes" : "no") << "\n";
    out << "short exact everywhere: " << (rep.all_short_exact ? "yes" : "no") << "\n";
    if (!rep.ok) {
        const SquareReport& s = rep.squares[rep.first_failure];
        out << "first failure: square at elements (" << s.a << ", " << s.b << ", " << s.c << ", "
            << s.d << ")\n";
    }
    return 0;
}

int cmd_dualize(const std::string& file, const std::string& out_file, std::ostream& out) {
    PersistenceModule M = load(file);
    write_text_file(out_file, serialize_module(dualize(M)));
    out << "wrote " << out_file << "\n";
    return 0;
}

int cmd_extend(const std::string& file, const std::string& out_file, std::ostream& out) {
    PersistenceModule M = load(file);
    PersistenceModule E = extend_zigzag(M);
    write_text_file(out_file, serialize_module(E));
    out << "wrote " << out_file << ": extended fence (" << M.poset->size << " points) to a "
        << E.poset->m << " x " << E.poset->n << " grid\n";
    return 0;
}

int cmd_zigzag(const std::string& file, std::uint64_t seed, std::ostream& out) {
    PersistenceModule M = load(file);
    Barcode bc = zigzag_barcode(M, seed);
    out << "zigzag barcode over F_" << M.field.p << " (seed " << seed << ", two routes agree)\n";
    print_barcode(out, bc);
    return 0;
}

int cmd_gen(const std::string& mode, const std::string& spec_file, const std::string& out_file,
            std::uint64_t seed, bool seed_given, std::ostream& out) {
    FieldSpec F(default_field_char());
    std::string text = read_text_file(spec_file);
    if (mode == "intervals") {
        GeneratorSpec spec = parse_interval_spec(text);
        if (seed_given) spec.seed = seed;
        GeneratedModule g = random_module(spec, F);
        write_text_file(out_file, serialize_module(g.module));
        out << "wrote " << out_file << ": " << g.module.poset->size << " elements, total dim "
            << total_dim(g.module) << ", " << g.ground_truth.size()
            << " interval classes (seed " << spec.seed << ")\n";
        return 0;
    }
    SampledFunction f = parse_function_spec(text);
    PersistenceModule M = mode == "sublevel" ? sublevel_h0(f, F) : interlevel_h0(f, F);
    write_text_file(out_file, serialize_module(M));
    out << "wrote " << out_file << ": " << M.poset->size << " elements, total dim "
        << total_dim(M) << "\n";
    return 0;
}

int cmd_plot(const std::string& file, const std::string& out_file, std::uint64_t seed,
             std::ostream& out) {
    PersistenceModule M = load(file);
    std::string svg;
    std::string what;
    switch (M.poset->kind) {
        case ShapeKind::Chain: {
            Barcode bc = barcode_chain(M);
            svg = render_barcode_svg(bc, M.poset->size);
            what = std::to_string(bc.bars.size()) + " bars";
            break;
        }
        case ShapeKind::Zigzag: {
            Barcode bc = zigzag_barcode(M, seed);
            svg = render_barcode_svg(bc, M.poset->size);
            what = std::to_string(bc.bars.size()) + " bars";
            break;
        }
        case ShapeKind::Grid:
        case ShapeKind::Triangle: {
            BlockList bl = blocks_of(M, seed);
            svg = render_blocklist_svg(bl, *M.poset);
            what = std::to_string(bl.blocks.size()) + " blocks";
            break;
        }
        default:
            throw Error("plot supports chain, zigzag, grid and triangle modules");
    }
    write_text_file(out_file, svg);
    out << "wrote " << out_file << ": " << what << "\n";
    return 0;
}

} // namespace

int exit_code_for(const std::exception& e) {
    return dynamic_cast<const Counterexample*>(&e) ? 2 : 1;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pointwise finite dimensional persistence modules over finite posets"};
    app.name("pmd");
    app.require_subcommand(1);

    std::string file, out_file, json_out, mode, spec_file;
    std::uint64_t seed = 0;

    CLI::App* validate = app.add_subcommand("validate", "parse a module file and validate it");
    validate->add_option("FILE", file)->required();

    CLI::App* decomp = app.add_subcommand("decompose", "decompose into indecomposables");
    decomp->add_option("FILE", file)->required();
    decomp->add_option("--seed", seed, "random seed");
    decomp->add_option("--json", json_out, "write a machine readable report");

    CLI::App* barcode = app.add_subcommand("barcode", "interval barcode of a chain module");
    barcode->add_option("FILE", file)->required();

    CLI::App* blocks = app.add_subcommand("blocks", "block decomposition of a grid module");
    blocks->add_option("FILE", file)->required();
    blocks->add_option("--seed", seed, "random seed");

    CLI::App* mex = app.add_subcommand("middle-exact", "check exactness on unit squares");
    mex->add_option("FILE", file)->required();

    CLI::App* dual = app.add_subcommand("dualize", "write the dual module");
    dual->add_option("FILE", file)->required();
    dual->add_option("-o,--output", out_file)->required();

    CLI::App* extend = app.add_subcommand("extend", "extend a zigzag module to its window grid");
    extend->add_option("FILE", file)->required();
    extend->add_option("-o,--output", out_file)->required();

    CLI::App* zigzag = app.add_subcommand("zigzag", "dual route zigzag barcode");
    zigzag->add_option("FILE", file)->required();
    zigzag->add_option("--seed", seed, "random seed");

    CLI::App* gen = app.add_subcommand("gen", "generate a module file from a spec");
    gen->add_option("MODE", mode)->required()->check(
        CLI::IsMember({"intervals", "interlevel", "sublevel"}));
    gen->add_option("SPEC", spec_file)->required();
    gen->add_option("-o,--output", out_file)->required();
    CLI::Option* gen_seed = gen->add_option("--seed", seed, "random seed override");

    CLI::App* plot = app.add_subcommand("plot", "render a barcode or block diagram as SVG");
    plot->add_option("FILE", file)->required();
    plot->add_option("-o,--output", out_file)->required();
    plot->add_option("--seed", seed, "random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, out);
        if (decomp->parsed()) return cmd_decompose(file, seed, json_out, out);
        if (barcode->parsed()) return cmd_barcode(file, out);
        if (blocks->parsed()) return cmd_blocks(file, seed, out);
        if (mex->parsed()) return cmd_middle_exact(file, out);
        if (dual->parsed()) return cmd_dualize(file, out_file, out);
        if (extend->parsed()) return cmd_extend(file, out_file, out);
        if (zigzag->parsed()) return cmd_zigzag(file, seed, out);
        if (gen->parsed()) return cmd_gen(mode, spec_file, out_file, seed, gen_seed->count() > 0, out);
        if (plot->parsed()) return cmd_plot(file, out_file, seed, out);
        err << "usage error: no command\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

} // namespace pmd
