#include <CLI11.hpp>

#include <iostream>

#include "fia/generate.hpp"
#include "fia/io.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;

struct Options {
    std::string poset_path;
    std::string ring_selector = "z";
    std::string out_path;  // empty = stdout
};

void emit(const Options& opt, const fia::Json& j)
{
    if (opt.out_path.empty())
        std::cout << fia::dump(j);
    else
        fia::save_file(opt.out_path, j);
}

fia::PosetPtr load_poset(const Options& opt)
{
    return fia::poset_from_json(fia::load_file(opt.poset_path));
}

int run_check(const Options& opt, const std::string& in_path)
{
    auto poset = load_poset(opt);
    auto spec = fia::RingSpec::parse(opt.ring_selector);
    fia::Json j = fia::load_file(in_path);
    const std::string type = j.value("type", "");
    if (type == "higher_derivation") {
        auto d = fia::hd_from_json(j, poset, spec);
        auto rep = fia::hd_check(d);
        if (rep.ok) {
            std::cout << "ok: higher derivation of order " << d.order() << "\n";
            return 0;
        }
        for (const auto& v : rep.violations)
            std::cout << "violation: n=" << v.n << " pair=(" << poset->segment_label(v.seg_a)
                      << ")x(" << poset->segment_label(v.seg_b) << ")\n";
        return kExitInvalid;
    }
    if (type == "transitive_map") {
        auto sigma = fia::tm_from_json(j, poset, spec);
        auto rep = fia::tm_check(sigma);
        if (rep.ok) {
            std::cout << "ok: transitive map of order " << sigma.order() << "\n";
            return 0;
        }
        for (const auto& v : rep.violations)
            std::cout << "violation: n=" << v.n << " segment=(" << poset->segment_label(v.seg)
                      << ") z=" << poset->label(v.mid) << "\n";
        return kExitInvalid;
    }
    throw fia::ParseError("check expects a higher_derivation or transitive_map record");
}

int run_mul(const Options& opt, const std::string& a_path, const std::string& b_path)
{
    auto poset = load_poset(opt);
    auto spec = fia::RingSpec::parse(opt.ring_selector);
    auto a = fia::hd_from_json(fia::load_file(a_path), poset, spec);
    auto b = fia::hd_from_json(fia::load_file(b_path), poset, spec);
    emit(opt, fia::hd_to_json(fia::hd_mul(a, b)));
    return 0;
}

int run_inv(const Options& opt, const std::string& in_path)
{
    auto poset = load_poset(opt);
    auto spec = fia::RingSpec::parse(opt.ring_selector);
    auto d = fia::hd_from_json(fia::load_file(in_path), poset, spec);
    emit(opt, fia::hd_to_json(fia::hd_inverse(d)));
    return 0;
}

int run_gen(const Options& opt, uint64_t seed, int order, double sparsity, uint64_t bound)
{
    auto poset = load_poset(opt);
    fia::GenConfig cfg;
    cfg.seed = seed;
    cfg.order = order;
    cfg.sparsity = sparsity;
    cfg.coeff_bound = bound;
    cfg.ring = fia::RingSpec::parse(opt.ring_selector);
    emit(opt, fia::hd_to_json(fia::gen_hd(cfg, poset)));
    return 0;
}

int run_decompose(const Options& opt, const std::string& in_path)
{
    auto poset = load_poset(opt);
    auto spec = fia::RingSpec::parse(opt.ring_selector);
    auto d = fia::hd_from_json(fia::load_file(in_path), poset, spec);
    auto rep = fia::hd_check(d);
    if (!rep.ok) {
        for (const auto& v : rep.violations)
            std::cerr << "violation: n=" << v.n << " pair=(" << poset->segment_label(v.seg_a)
                      << ")x(" << poset->segment_label(v.seg_b) << ")\n";
        std::cerr << "error: input is not a higher derivation\n";
        return kExitInvalid;
    }
    fia::Decomposition dec = fia::decompose(d);
    emit(opt, fia::decomposition_to_json(dec, true));
    return 0;
}

int run_verify(const Options& opt, const std::string& hd_path, const std::string& dec_path)
{
    auto poset = load_poset(opt);
    auto spec = fia::RingSpec::parse(opt.ring_selector);
    auto d = fia::hd_from_json(fia::load_file(hd_path), poset, spec);
    auto dec = fia::decomposition_from_json(fia::load_file(dec_path), poset, spec);
    auto tm = fia::tm_check(dec.sigma);
    if (!tm.ok) {
        std::cout << "sigma fails the transitive-map conditions\n";
        return kExitVerifyFailed;
    }
    auto res = fia::verify(d, dec.rho, dec.sigma);
    if (!res.ok) {
        std::cout << "mismatch at component " << res.n << ", segment ("
                  << poset->segment_label(res.seg) << ")\n";
        return kExitVerifyFailed;
    }
    std::cout << "verified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact higher-derivation calculus on finitary incidence algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--poset", opt.poset_path, "Poset record file")->required();
    app.add_option("--ring", opt.ring_selector, "Ring selector: z | q | zmod:<m>");
    app.add_option("--out", opt.out_path, "Output file (default: stdout)");

    std::string in_a, in_b;

    auto* check = app.add_subcommand("check", "Validate a higher derivation or transitive map");
    check->add_option("input", in_a, "Record file")->required();

    auto* mul = app.add_subcommand("mul", "Product of two higher derivations");
    mul->add_option("a", in_a, "Left factor")->required();
    mul->add_option("b", in_b, "Right factor")->required();

    auto* inv = app.add_subcommand("inv", "Group inverse of a higher derivation");
    inv->add_option("input", in_a, "Higher derivation file")->required();

    uint64_t seed = 0, bound = 5;
    int order = 2;
    double sparsity = 0.5;
    auto* gen = app.add_subcommand("gen", "Generate a reproducible higher derivation");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--order", order, "Truncation order N");
    gen->add_option("--sparsity", sparsity, "Probability of a nonzero coefficient");
    gen->add_option("--bound", bound, "Coefficient magnitude bound");

    auto* dec = app.add_subcommand("decompose", "Split d into an inner part and a transitive part");
    dec->add_option("input", in_a, "Higher derivation file")->required();

    auto* ver = app.add_subcommand("verify", "Check a decomposition against its derivation");
    ver->add_option("hd", in_a, "Higher derivation file")->required();
    ver->add_option("decomposition", in_b, "Decomposition file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(opt, in_a);
        if (mul->parsed())
            return run_mul(opt, in_a, in_b);
        if (inv->parsed())
            return run_inv(opt, in_a);
        if (gen->parsed())
            return run_gen(opt, seed, order, sparsity, bound);
        if (dec->parsed())
            return run_decompose(opt, in_a);
        if (ver->parsed())
            return run_verify(opt, in_a, in_b);
    } catch (const fia::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fia::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
