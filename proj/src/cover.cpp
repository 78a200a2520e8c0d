#include "boxi/cover.hpp"

namespace boxi {

bool verify_cover(const Graph& host, const EdgeSet& target, const Cover& cover) {
    Bitset covered(host.edge_count());
    for (const CoverMember& m : cover.members) {
        if (m.edges.bits.capacity() != host.edge_count()) return false;
        if (!verify_certificate(host, m.edges, m.cert)) return false;
        covered |= m.edges.bits;
    }
    return covered == target.bits;
}

}  // namespace boxi
