#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ecnet/chunker.hpp"
#include "ecnet/corpus.hpp"
#include "ecnet/date.hpp"
#include "ecnet/dictionary.hpp"
#include "ecnet/text.hpp"

namespace {

using namespace ecnet;

std::string random_word(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(4, 10);
    std::uniform_int_distribution<int> letter('a', 'z');
    std::string w(static_cast<std::size_t>(len(rng)), ' ');
    for (char& c : w) c = static_cast<char>(letter(rng));
    return w;
}

// n surfaces, roughly a quarter of them two-word phrases.
std::vector<std::string> make_surfaces(std::size_t n) {
    std::mt19937 rng(12345);
    std::vector<std::string> surfaces;
    surfaces.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = random_word(rng);
        if (rng() % 4 == 0) s += " " + random_word(rng);
        surfaces.push_back(std::move(s));
    }
    return surfaces;
}

EntityDictionary make_dictionary(const std::vector<std::string>& surfaces) {
    static constexpr const char* kTypes[] = {"DISEASE", "DRUG", "GENE"};
    EntityDictionary dict;
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
        dict.insert(parse_dictionary_line(surfaces[i] + "-->" + kTypes[i % 3] + "__X" +
                                          std::to_string(i)));
    }
    return dict;
}

// word_count words, about one in ten a dictionary surface, with casing and
// punctuation noise so normalization has real work to do.
std::string make_text(std::size_t word_count, const std::vector<std::string>& surfaces) {
    std::mt19937 rng(67890);
    std::uniform_int_distribution<std::size_t> pick(0, surfaces.size() - 1);
    std::string text;
    for (std::size_t i = 0; i < word_count; ++i) {
        std::string w = rng() % 10 == 0 ? surfaces[pick(rng)] : random_word(rng);
        if (rng() % 5 == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
        if (rng() % 7 == 0) w += ',';
        text += w;
        text += rng() % 11 == 0 ? "  " : " ";
    }
    return text;
}

void BM_NormalizeText(benchmark::State& state) {
    const std::string text = make_text(8192, make_surfaces(256));
    for (auto _ : state) {
        NormalizedText norm = normalize_text(text);
        benchmark::DoNotOptimize(norm.text.data());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_NormalizeText);

void BM_ChunkText(benchmark::State& state) {
    const auto surfaces = make_surfaces(static_cast<std::size_t>(state.range(0)));
    const EntityDictionary dict = make_dictionary(surfaces);
    const std::string text = make_text(8192, surfaces);
    std::size_t hits = 0;
    for (auto _ : state) {
        auto chunks = chunk_text(dict, text);
        hits = chunks.size();
        benchmark::DoNotOptimize(chunks.data());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(text.size()));
    state.counters["hits"] = static_cast<double>(hits);
}
BENCHMARK(BM_ChunkText)->RangeMultiplier(4)->Range(1024, 16384);

void BM_ExtractEntities(benchmark::State& state) {
    const auto surfaces = make_surfaces(4096);
    const EntityDictionary dict = make_dictionary(surfaces);
    PaperRecord paper;
    paper.paper_id = "P1";
    paper.title = make_text(12, surfaces);
    paper.abstract = make_text(250, surfaces);
    paper.pub_date = parse_date("2016/01/01");
    for (auto _ : state) {
        auto occurrences = extract_entities(dict, paper);
        benchmark::DoNotOptimize(occurrences.data());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExtractEntities);

}  // namespace

BENCHMARK_MAIN();
