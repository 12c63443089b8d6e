#include "descente/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

namespace descente {
namespace {

struct Block {
    Natural p;
    Natural q;
};

std::vector<Block> blocks_for(const Natural& bound, bool zeros) {
    std::vector<Block> out;
    if (zeros && bound >= 1) out.push_back({1, 0});
    for (Natural p = 2; square(p) + 1 <= bound; p = p + 1) {
        for (Natural q = 1; q < p && square(p) + square(q) <= bound; q = q + 1) {
            if (Generators::valid(p, q)) out.push_back({p, q});
        }
    }
    return out;
}

void emit_if_solution(const Natural& x0, const Natural& x1, const Natural& x2,
                      std::vector<CandidateSolution>& out) {
    const Natural prod = x0 * x1;
    if (prod.is_odd()) return;
    if (auto x3 = exact_sqrt(prod / 2)) {
        CandidateSolution c{x0, x1, x2, *x3};
        if (solves_equations(c)) out.push_back(std::move(c));
    }
}

std::vector<CandidateSolution> search_block(const Block& b, const Natural& bound, bool zeros) {
    std::vector<CandidateSolution> found;
    const Natural hyp = square(b.p) + square(b.q);
    const Natural even = 2 * b.p * b.q;
    const Natural odd = square(b.p) - square(b.q);
    for (Natural d = 1; d * hyp <= bound; d = d + 1) {
        const Natural a = d * std::min(even, odd);
        const Natural c = d * std::max(even, odd);
        const Natural x2 = d * hyp;
        emit_if_solution(a, c, x2, found);
        if (zeros) emit_if_solution(c, a, x2, found);
    }
    return found;
}

std::string block_key(const Block& b) { return b.p.to_string() + " " + b.q.to_string(); }

std::string cache_header(const SearchOptions& o) {
    return "# bound=" + o.bound.to_string() + " zeros=" + (o.zeros ? "1" : "0");
}

class Cache {
public:
    explicit Cache(const SearchOptions& o) {
        const auto& path = *o.cache;
        const std::string header = cache_header(o);
        bool keep = false;
        if (std::ifstream in(path); in) {
            std::string line;
            if (std::getline(in, line) && line == header) {
                keep = true;
                while (std::getline(in, line)) {
                    std::istringstream ls(line);
                    std::string p, q, tag;
                    if (ls >> p >> q >> tag && tag == "done") done_.insert(p + " " + q);
                }
            }
        }
        if (!keep) {
            std::ofstream fresh(path, std::ios::trunc);
            if (!fresh) throw CacheError("cannot write cache file " + path.string());
            fresh << header << '\n';
            if (!fresh) throw CacheError("cannot write cache file " + path.string());
        }
        out_.open(path, std::ios::app);
        if (!out_) throw CacheError("cannot append to cache file " + path.string());
    }

    [[nodiscard]] bool done(const Block& b) const { return done_.count(block_key(b)) > 0; }

    void mark(const Block& b) {
        std::lock_guard lock(mu_);
        out_ << block_key(b) << " done\n";
        out_.flush();
        if (!out_) throw CacheError("cache write failed");
    }

private:
    std::set<std::string> done_;
    std::ofstream out_;
    std::mutex mu_;
};

}  // namespace

SearchResult exhaustive_search(const Natural& bound_x2) {
    SearchOptions o;
    o.bound = bound_x2;
    return exhaustive_search(o);
}

SearchResult exhaustive_search(const SearchOptions& options) {
    if (options.bound.is_zero()) throw DomainError("exhaustive_search: bound must be >= 1");
    if (options.workers == 0) throw DomainError("exhaustive_search: need at least one worker");
    const auto start = std::chrono::steady_clock::now();

    std::optional<Cache> cache;
    if (options.cache) cache.emplace(options);

    const std::vector<Block> blocks = blocks_for(options.bound, options.zeros);
    SearchResult result;
    result.bound = options.bound;
    result.blocks = blocks.size();
    if (options.zeros) result.solutions.push_back({0, 0, 0, 0});

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> resumed{0};
    std::mutex mu;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < blocks.size(); i = next++) {
                const Block& b = blocks[i];
                if (cache && cache->done(b)) {
                    ++resumed;
                    continue;
                }
                auto found = search_block(b, options.bound, options.zeros);
                if (found.empty()) {
                    if (cache) cache->mark(b);
                    continue;
                }
                // Blocks with solutions stay unmarked so a resumed run reports them again.
                std::lock_guard lock(mu);
                for (auto& c : found) result.solutions.push_back(std::move(c));
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
        }
    };

    const unsigned n = std::min<std::size_t>(options.workers, std::max<std::size_t>(blocks.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const CandidateSolution& a, const CandidateSolution& b) {
                  if (a.x2 != b.x2) return a.x2 < b.x2;
                  return a.x0 < b.x0;
              });
    result.blocks_resumed = resumed;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace descente
