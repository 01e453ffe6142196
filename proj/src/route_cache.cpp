#include "bitroute/route_cache.hpp"

#include "bitroute/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace bitroute
{

EdgeMask
encode_edge(EdgeOrdinal k)
{
    if (k < 1 || k > kMaxOrdinal)
    {
        throw MaskError(MaskError::Kind::OutOfRange,
                        "edge ordinal " + std::to_string(k) + " outside 1.." +
                            std::to_string(kMaxOrdinal));
    }
    return EdgeMask::from_bits(std::uint64_t{1} << (k - 1));
}

EdgeOrdinal
decode_ordinal(EdgeMask mask)
{
    const auto bits = mask.bits();
    if (bits == 0)
    {
        throw MaskError(MaskError::Kind::Untrained, "mask is untrained");
    }
    if (!std::has_single_bit(bits))
    {
        throw MaskError(MaskError::Kind::Corrupt,
                        "mask has " + std::to_string(std::popcount(bits)) + " bits set");
    }
    // bit_width is floor(log2) + 1
    return static_cast<EdgeOrdinal>(std::bit_width(bits));
}

std::size_t
mask_bytes_for_degree(std::size_t degree)
{
    if (degree > kMaxOrdinal)
    {
        throw TableError("degree " + std::to_string(degree) + " exceeds the " +
                         std::to_string(kMaxOrdinal) + "-edge mask limit");
    }
    return std::max<std::size_t>(1, (degree + 7) / 8);
}

RouteTable::RouteTable(NodeId owner, std::size_t node_count, std::size_t degree)
    : m_owner(owner),
      m_entryBytes(mask_bytes_for_degree(degree)),
      m_storage(node_count * m_entryBytes, 0),
      m_traffic(node_count, 0)
{
}

std::size_t
RouteTable::slot(NodeId dest) const
{
    if (dest < 1 || dest > m_traffic.size())
    {
        throw TableError("destination " + std::to_string(dest) + " out of range for node " +
                         std::to_string(m_owner));
    }
    return (dest - 1) * m_entryBytes;
}

EdgeMask
RouteTable::entry(NodeId dest) const
{
    const auto base = slot(dest);
    std::uint64_t bits = 0;
    for (std::size_t b = 0; b < m_entryBytes; ++b)
    {
        bits |= std::uint64_t{m_storage[base + b]} << (8 * b);
    }
    return EdgeMask::from_bits(bits);
}

void
RouteTable::inject_mask(NodeId dest, EdgeMask mask)
{
    const auto base = slot(dest);
    for (std::size_t b = 0; b < m_entryBytes; ++b)
    {
        m_storage[base + b] = static_cast<std::uint8_t>(mask.bits() >> (8 * b));
    }
}

void
RouteTable::set_entry(NodeId dest, EdgeOrdinal k)
{
    if (dest == m_owner)
    {
        throw TableError("node " + std::to_string(m_owner) + " cannot hold a route to itself");
    }
    const auto mask = encode_edge(k);
    if (k > 8 * m_entryBytes)
    {
        throw MaskError(MaskError::Kind::OutOfRange,
                        "edge ordinal " + std::to_string(k) + " does not fit node " +
                            std::to_string(m_owner) + "'s " + std::to_string(8 * m_entryBytes) +
                            "-bit entries");
    }
    inject_mask(dest, mask);
}

void
RouteTable::clear_entry(NodeId dest)
{
    const auto base = slot(dest);
    std::fill_n(m_storage.begin() + static_cast<std::ptrdiff_t>(base), m_entryBytes, 0);
}

std::size_t
RouteTable::trained_count() const noexcept
{
    std::size_t count = 0;
    for (std::size_t d = 0; d < m_traffic.size(); ++d)
    {
        const auto first = m_storage.begin() + static_cast<std::ptrdiff_t>(d * m_entryBytes);
        if (std::any_of(first, first + static_cast<std::ptrdiff_t>(m_entryBytes),
                        [](std::uint8_t b) { return b != 0; }))
        {
            ++count;
        }
    }
    return count;
}

std::size_t
RouteTable::clear()
{
    const auto cleared = trained_count();
    std::fill(m_storage.begin(), m_storage.end(), 0);
    return cleared;
}

std::size_t
RouteTable::reset(std::size_t node_count, std::size_t degree)
{
    const auto cleared = trained_count();
    m_entryBytes = mask_bytes_for_degree(degree);
    m_storage.assign(node_count * m_entryBytes, 0);
    m_traffic.resize(std::max(node_count, m_traffic.size()), 0);
    return cleared;
}

void
RouteTable::grow(std::size_t node_count)
{
    if (node_count <= m_traffic.size())
    {
        return;
    }
    m_storage.resize(node_count * m_entryBytes, 0);
    m_traffic.resize(node_count, 0);
}

NextHop
RouteTable::get_next_hop(const Graph& g, NodeId dest) const
{
    const auto mask = entry(dest);
    if (mask.empty())
    {
        return {NextHop::Status::Untrained, 0};
    }
    if (!std::has_single_bit(mask.bits()))
    {
        return {NextHop::Status::Corrupt, 0};
    }
    const auto k = decode_ordinal(mask);
    if (k > g.degree(m_owner))
    {
        return {NextHop::Status::Stale, 0};
    }
    return {NextHop::Status::Hop, g.index_vertex(m_owner, k)};
}

std::size_t
RouteTable::invalidate_for_departure(const Graph& g,
                                     NodeId dead,
                                     std::span<const NodeId> former_neighbors)
{
    if (g.is_alive(dead))
    {
        throw GraphError("node " + std::to_string(dead) + " has not left the network");
    }
    if (std::find(former_neighbors.begin(), former_neighbors.end(), m_owner) ==
        former_neighbors.end())
    {
        return 0;
    }
    return reset(g.node_count(), g.degree(m_owner));
}

std::uint64_t
RouteTable::traffic(NodeId dest) const
{
    slot(dest);
    return m_traffic[dest - 1];
}

void
RouteTable::count_traffic(NodeId dest)
{
    slot(dest);
    ++m_traffic[dest - 1];
}

std::size_t
table_byte_size(const RouteTable& table, const Graph& g)
{
    const auto degree = g.is_alive(table.owner()) ? g.degree(table.owner()) : 0;
    return g.node_count() * mask_bytes_for_degree(degree);
}

} // namespace bitroute
