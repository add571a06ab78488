#include "latframe/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>

#include "latframe/coherence.hpp"
#include "latframe/lattice.hpp"

namespace latframe {

FramedGraph random_framed_graph(const RandomGraphParams& params) {
    if (params.vertices < 2) throw std::invalid_argument("a random graph needs at least two vertices");
    std::mt19937_64 rng(params.seed);
    const int n = params.vertices;
    const auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    std::map<std::pair<int, int>, int> multiplicity;
    int total = 0;
    for (int v = 2; v <= n; ++v) {
        const int tail = v == 2 ? 1 : pick(v - 2, v - 1);
        ++multiplicity[{tail, v}];
        ++total;
    }
    std::vector<std::pair<int, int>> slots;
    for (int t = 1; t <= n; ++t)
        for (int h = t + 1; h <= std::min(n, t + 2); ++h) slots.emplace_back(t, h);
    while (total < params.edges) {
        std::vector<std::pair<int, int>> open;
        for (const auto& s : slots)
            if (multiplicity[s] < 2) open.push_back(s);
        if (open.empty()) break;
        ++multiplicity[open[static_cast<std::size_t>(pick(0, static_cast<int>(open.size()) - 1))]];
        ++total;
    }

    std::vector<Edge> edges;
    for (const auto& [pair, count] : multiplicity)
        for (int k = 0; k < count; ++k)
            edges.push_back(Edge{"e" + std::to_string(edges.size() + 1), pair.first, pair.second});

    std::vector<std::vector<EdgeIndex>> in(static_cast<std::size_t>(n) + 1), out(in.size());
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(edges.size()); ++e) {
        out[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].tail)].push_back(e);
        in[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].head)].push_back(e);
    }
    for (auto& order : in) std::shuffle(order.begin(), order.end(), rng);
    for (auto& order : out) std::shuffle(order.begin(), order.end(), rng);
    for (int v = 1; v <= n; ++v) {
        if (in[static_cast<std::size_t>(v)].empty() || out[static_cast<std::size_t>(v)].empty()) {
            in[static_cast<std::size_t>(v)].clear();
            out[static_cast<std::size_t>(v)].clear();
        }
    }
    return FramedGraph::create(n, 1, std::move(edges), std::move(in), std::move(out));
}

namespace {

long long parse_number(std::string_view text, std::string_view spec) {
    long long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("bad number in '" + std::string(spec) + "'");
    return value;
}

}  // namespace

bool is_builtin_spec(std::string_view text) {
    return text.starts_with("oruga:") || text.starts_with("caracol:") || text.starts_with("random:");
}

FramedGraph builtin_graph(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected FAMILY:ARGS, got '" + std::string(spec) + "'");
    const auto family = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);
    if (family == "oruga" || family == "caracol") {
        const auto n = parse_number(args, spec);
        if (family == "oruga") {
            if (n < 1) throw std::invalid_argument("oruga needs n >= 1");
            return oruga(static_cast<int>(n));
        }
        if (n < 2) throw std::invalid_argument("caracol needs n >= 2");
        return caracol(static_cast<int>(n));
    }
    if (family == "random") {
        std::vector<long long> parts;
        std::size_t start = 0;
        while (true) {
            const auto comma = args.find(',', start);
            parts.push_back(parse_number(args.substr(start, comma - start), spec));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (parts.size() != 3) throw std::invalid_argument("random needs SEED,V,E");
        if (parts[1] < 2 || parts[2] < 1) throw std::invalid_argument("random needs V >= 2 and E >= 1");
        return random_framed_graph({static_cast<std::uint64_t>(parts[0]), static_cast<int>(parts[1]),
                                    static_cast<int>(parts[2])});
    }
    throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

std::vector<CorpusEntry> reference_corpus(int random_count, int route_cap) {
    std::vector<CorpusEntry> out;
    for (int n = 2; n <= 4; ++n) out.push_back({"oruga:" + std::to_string(n), oruga(n)});
    for (int n = 2; n <= 3; ++n) out.push_back({"caracol:" + std::to_string(n), caracol(n)});
    int produced = 0;
    for (std::uint64_t seed = 1; produced < random_count; ++seed) {
        const int v = 3 + static_cast<int>(seed % 4);
        const int e = std::min(10, v + 1 + static_cast<int>((seed * 7) % 5));
        auto g = random_framed_graph({seed, v, e});
        if (enumerate_bricks(g).empty()) continue;  // one-element lattice
        try {
            RouteCatalog probe(g, static_cast<std::size_t>(route_cap));
        } catch (const LimitError&) {
            continue;
        }
        out.push_back({"random:" + std::to_string(seed) + "," + std::to_string(v) + "," + std::to_string(e), std::move(g)});
        ++produced;
    }
    return out;
}

}  // namespace latframe
