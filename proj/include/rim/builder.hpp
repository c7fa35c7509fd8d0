#pragma once
// Incremental construction of circuits in topological order, with the tree
// gadgets shared by the completion and merge constructions.

#include <queue>
#include <vector>

#include "rim/circuit.hpp"

namespace rim {

struct CircuitBuilder {
    Circuit C;

    int add(Gate kind, int a = -1, int b = -1, int var = 0) {
        C.v.push_back(Vertex{kind, a, b, var});
        return (int)C.v.size() - 1;
    }
    int input(int var) { return add(Gate::Input, -1, -1, var); }
    int output(int var, int src) { return add(Gate::Output, src, -1, var); }

    // c read-once copies of src (c >= 1) via a balanced fork tree.
    std::vector<int> fork_tree(int src, int c) {
        std::vector<int> copies{src};
        size_t next = 0;
        while ((int)(copies.size() - next) < c) {
            int f = add(Gate::Fork, copies[next++]);
            copies.push_back(f);
            copies.push_back(f); // fork's two output ports share the vertex id
        }
        return std::vector<int>(copies.begin() + next, copies.end());
    }

    // Binary combining tree; signals available at smaller depth are combined
    // first, keeping the result depth near log of the weighted size.
    int combine_tree(Gate kind, std::vector<int> xs) {
        if (xs.empty()) throw circuit_error("combine_tree: no operands");
        std::vector<int> depth(C.v.size(), 0);
        for (size_t i = 0; i < C.v.size(); ++i) {
            int p = 0;
            if (C.v[i].a >= 0) p = std::max(p, depth[C.v[i].a]);
            if (C.v[i].b >= 0) p = std::max(p, depth[C.v[i].b]);
            depth[i] = p + (is_internal_gate(C.v[i].kind) ? 1 : 0);
        }
        using Item = std::pair<int, int>; // (depth, vertex)
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        for (int x : xs) pq.push({depth[x], x});
        while (pq.size() > 1) {
            auto [da, a] = pq.top();
            pq.pop();
            auto [db, b] = pq.top();
            pq.pop();
            int g = add(kind, a, b);
            pq.push({std::max(da, db) + 1, g});
        }
        return pq.top().second;
    }
    int and_tree(std::vector<int> xs) { return combine_tree(Gate::And, std::move(xs)); }
    int or_tree(std::vector<int> xs) { return combine_tree(Gate::Or, std::move(xs)); }

    // Constant wires burn one read-once copy pair of an existing signal.
    int const_one(int src_copy1, int src_copy2) {
        int n = add(Gate::Not, src_copy2);
        return add(Gate::Or, src_copy1, n);
    }
    int const_zero(int src_copy1, int src_copy2) {
        int n = add(Gate::Not, src_copy2);
        return add(Gate::And, src_copy1, n);
    }

    // h0: partial identity on 1 (defined iff the signal is 1).
    int h0(int src) {
        int f = add(Gate::Fork, src);
        int n = add(Gate::Not, f);
        return add(Gate::Zeta1, n, f);
    }

    Circuit take() {
        Diagnostics d = validate(C);
        if (!d.ok) throw circuit_error("builder produced invalid circuit: " + d.issues.front());
        return std::move(C);
    }
};

} // namespace rim
