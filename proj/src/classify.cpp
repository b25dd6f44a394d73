#include "staudt/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <string>
#include <thread>

#include "staudt/errors.hpp"

namespace staudt {

namespace {

struct Problem {
    LinePtr source;
    LinePtr target;
    GraphPtr source_graph;
    GraphPtr target_graph;
    HarmonicIndex target_index;
    std::vector<Quad> quads;
    // quads_through[p] = indices of quads containing p (once per quad)
    std::vector<std::vector<std::size_t>> quads_through;
    std::vector<PointId> order;

    Problem(const LinePtr& s, const LinePtr& t)
        : source(s),
          target(t),
          source_graph(build_distant_graph(s)),
          target_graph(build_distant_graph(t)),
          target_index(*t),
          quads(enumerate_harmonic_quadruples(*s)),
          quads_through(s->size()) {
        for (std::size_t i = 0; i < quads.size(); ++i) {
            std::array<PointId, 4> pts = quads[i].p;
            std::sort(pts.begin(), pts.end());
            const auto end = std::unique(pts.begin(), pts.end());
            for (auto it = pts.begin(); it != end; ++it) {
                quads_through[*it].push_back(i);
            }
        }
        std::vector<char> placed(s->size(), 0);
        if (!quads.empty()) {
            for (PointId p : quads.front().p) {
                if (!placed[p]) {
                    placed[p] = 1;
                    order.push_back(p);
                }
            }
        }
        std::vector<PointId> rest;
        for (PointId p = 0; p < s->size(); ++p) {
            if (!placed[p]) {
                rest.push_back(p);
            }
        }
        std::stable_sort(rest.begin(), rest.end(), [&](PointId a, PointId b) {
            return source_graph->degree(a) > source_graph->degree(b);
        });
        order.insert(order.end(), rest.begin(), rest.end());
    }
};

struct State {
    std::vector<Bits> dom;
    std::vector<std::int32_t> img;
};

class Worker {
public:
    Worker(const Problem& pr, std::uint64_t budget, std::size_t max_results, std::atomic<std::uint64_t>& nodes,
           std::atomic<std::size_t>& found, std::atomic<bool>& abort)
        : pr_(pr), budget_(budget), max_results_(max_results), nodes_(nodes), found_(found), abort_(abort) {}

    // Assigns s -> q and propagates; false on contradiction.
    bool assign_and_propagate(State& st, PointId s, PointId q) const {
        std::vector<PointId> queue;
        if (!assign(st, s, q, queue)) {
            return false;
        }
        while (!queue.empty()) {
            const PointId p = queue.back();
            queue.pop_back();
            if (!propagate_point(st, p, queue)) {
                return false;
            }
        }
        return true;
    }

    void search(State& st, std::size_t k) {
        const auto& order = pr_.order;
        while (k < order.size() && st.img[order[k]] >= 0) {
            ++k;
        }
        if (k == order.size()) {
            PointMap m{pr_.source, pr_.target, st.img};
            if (is_harmonicity_preserver(m, pr_.quads, pr_.target_index)) {
                if (found_.fetch_add(1, std::memory_order_relaxed) + 1 > max_results_) {
                    abort_.store(true, std::memory_order_relaxed);
                    return;
                }
                results.push_back(std::move(m));
            }
            return;
        }
        const PointId v = order[k];
        const Bits candidates = st.dom[v];
        for (auto c = candidates.find_first(); c != Bits::npos; c = candidates.find_next(c)) {
            if (!tick()) {
                return;
            }
            State next = st;
            if (assign_and_propagate(next, v, static_cast<PointId>(c))) {
                search(next, k + 1);
            }
            if (abort_.load(std::memory_order_relaxed)) {
                return;
            }
        }
    }

    bool tick() {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
            abort_.store(true, std::memory_order_relaxed);
            return false;
        }
        return !abort_.load(std::memory_order_relaxed);
    }

    std::vector<PointMap> results;

private:
    bool assign(State& st, PointId s, PointId q, std::vector<PointId>& queue) const {
        if (st.img[s] >= 0) {
            return st.img[s] == static_cast<std::int32_t>(q);
        }
        if (!st.dom[s].test(q)) {
            return false;
        }
        st.img[s] = static_cast<std::int32_t>(q);
        st.dom[s].reset();
        st.dom[s].set(q);
        queue.push_back(s);
        return true;
    }

    // Cuts dom[s] by `allowed`; assigns when a single value is left.
    bool restrict(State& st, PointId s, const Bits& allowed, std::vector<PointId>& queue) const {
        Bits& d = st.dom[s];
        d &= allowed;
        const auto first = d.find_first();
        if (first == Bits::npos) {
            return false;
        }
        if (st.img[s] < 0 && d.find_next(first) == Bits::npos) {
            return assign(st, s, static_cast<PointId>(first), queue);
        }
        return true;
    }

    bool propagate_point(State& st, PointId p, std::vector<PointId>& queue) const {
        const PointId q = static_cast<PointId>(st.img[p]);
        const Bits& nb = pr_.source_graph->neighbors(p);
        const Bits& tnb = pr_.target_graph->neighbors(q);
        for (auto s = nb.find_first(); s != Bits::npos; s = nb.find_next(s)) {
            if (!restrict(st, static_cast<PointId>(s), tnb, queue)) {
                return false;
            }
        }
        for (std::size_t qi : pr_.quads_through[p]) {
            const Quad& quad = pr_.quads[qi];
            std::int64_t free_point = -1;
            bool several = false;
            for (PointId x : quad.p) {
                if (st.img[x] < 0) {
                    if (free_point >= 0 && free_point != x) {
                        several = true;
                    }
                    free_point = x;
                }
            }
            if (several) {
                continue;
            }
            auto image_with = [&](PointId u, PointId c) {
                Quad out;
                for (int i = 0; i < 4; ++i) {
                    out.p[i] = quad.p[i] == u ? c : static_cast<PointId>(st.img[quad.p[i]]);
                }
                return out;
            };
            if (free_point < 0) {
                if (!pr_.target_index.contains(image_with(quad.p[0], static_cast<PointId>(st.img[quad.p[0]])))) {
                    return false;
                }
                continue;
            }
            const auto u = static_cast<PointId>(free_point);
            Bits allowed(pr_.target->size());
            const Bits& d = st.dom[u];
            for (auto c = d.find_first(); c != Bits::npos; c = d.find_next(c)) {
                if (pr_.target_index.contains(image_with(u, static_cast<PointId>(c)))) {
                    allowed.set(c);
                }
            }
            if (!restrict(st, u, allowed, queue)) {
                return false;
            }
        }
        return true;
    }

    const Problem& pr_;
    std::uint64_t budget_;
    std::size_t max_results_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<std::size_t>& found_;
    std::atomic<bool>& abort_;
};

}  // namespace

ClassificationResult classify_preservers(const LinePtr& source, const LinePtr& target, const ClassifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const Problem pr(source, target);
    ClassificationResult res;
    res.source_quads = pr.quads.size();

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::size_t> found{0};
    std::atomic<bool> abort{false};
    State root{std::vector<Bits>(source->size(), Bits(target->size())),
               std::vector<std::int32_t>(source->size(), -1)};
    for (Bits& d : root.dom) {
        d.set();
    }

    if (!pr.order.empty()) {
        const PointId first = pr.order.front();
        std::vector<PointId> candidates(target->size());
        std::iota(candidates.begin(), candidates.end(), PointId{0});
        const std::size_t nthreads = std::max<std::size_t>(1, std::min(options.threads, candidates.size()));
        std::vector<Worker> workers;
        workers.reserve(nthreads);
        for (std::size_t i = 0; i < nthreads; ++i) {
            workers.emplace_back(pr, options.node_budget, options.max_results, nodes, found, abort);
        }
        auto run = [&](std::size_t w) {
            Worker& worker = workers[w];
            for (std::size_t j = w; j < candidates.size(); j += nthreads) {
                if (!worker.tick()) {
                    return;
                }
                State st = root;
                if (worker.assign_and_propagate(st, first, candidates[j])) {
                    worker.search(st, 1);
                }
            }
        };
        if (nthreads == 1) {
            run(0);
        } else {
            std::vector<std::thread> threads;
            for (std::size_t w = 0; w < nthreads; ++w) {
                threads.emplace_back(run, w);
            }
            for (auto& t : threads) {
                t.join();
            }
        }
        for (Worker& w : workers) {
            std::move(w.results.begin(), w.results.end(), std::back_inserter(res.preservers));
        }
    }
    res.nodes = nodes.load();
    if (abort.load()) {
        const std::string what = found.load() > options.max_results
                                     ? "result cap " + std::to_string(options.max_results)
                                     : "node budget " + std::to_string(options.node_budget);
        throw ResourceError("preserver search " + source->ring().label() + " -> " + target->ring().label() +
                            " exceeded " + what);
    }
    std::sort(res.preservers.begin(), res.preservers.end(),
              [](const PointMap& a, const PointMap& b) { return a.image < b.image; });
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace staudt
