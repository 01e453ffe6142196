#pragma once

#include "bitroute/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bitroute
{

/// Largest edge ordinal a mask can hold.
inline constexpr EdgeOrdinal kMaxOrdinal = 64;

/**
 * One cached next-hop edge: either zero (untrained) or a single set bit.
 * Ordinal k is stored as bit k-1, so the second edge is binary 10 and the
 * third edge binary 100. Decoding takes the base-2 logarithm.
 */
class EdgeMask
{
  public:
    constexpr EdgeMask() = default;

    /// Raw bits, not validated. Used when reading packed storage and for
    /// injecting corrupt values in tests.
    static constexpr EdgeMask from_bits(std::uint64_t bits) noexcept
    {
        EdgeMask m;
        m.m_bits = bits;
        return m;
    }

    constexpr std::uint64_t bits() const noexcept
    {
        return m_bits;
    }

    constexpr bool empty() const noexcept
    {
        return m_bits == 0;
    }

    friend constexpr bool operator==(EdgeMask, EdgeMask) = default;

  private:
    std::uint64_t m_bits = 0;
};

/// Mask with only bit k-1 set. Throws MaskError(OutOfRange) unless
/// 1 <= k <= kMaxOrdinal.
EdgeMask encode_edge(EdgeOrdinal k);

/// log2(mask) + 1. Throws MaskError(Untrained) on zero and
/// MaskError(Corrupt) when more than one bit is set.
EdgeOrdinal decode_ordinal(EdgeMask mask);

/// Bytes needed for one mask at a node of the given degree (at least one).
std::size_t mask_bytes_for_degree(std::size_t degree);

/// Outcome of a cache lookup.
struct NextHop
{
    enum class Status
    {
        Hop,       ///< trained and consistent with the current adjacency row
        Untrained, ///< zero mask
        Stale,     ///< decoded ordinal exceeds the owner's current degree
        Corrupt    ///< more than one bit set
    };

    Status status = Status::Untrained;
    NodeId node = 0; ///< valid only for Status::Hop

    bool ok() const noexcept
    {
        return status == Status::Hop;
    }
};

/**
 * A node's training array: one packed mask per destination id plus one
 * traffic counter per destination. Masks are stored in
 * mask_bytes_for_degree(degree) bytes each, so a node of degree <= 8 spends
 * exactly one byte per destination.
 */
class RouteTable
{
  public:
    RouteTable() = default;
    RouteTable(NodeId owner, std::size_t node_count, std::size_t degree);

    NodeId owner() const noexcept
    {
        return m_owner;
    }

    std::size_t destination_count() const noexcept
    {
        return m_traffic.size();
    }

    std::size_t bytes_per_entry() const noexcept
    {
        return m_entryBytes;
    }

    /// Bytes occupied by the mask storage.
    std::size_t byte_size() const noexcept
    {
        return m_storage.size();
    }

    EdgeMask entry(NodeId dest) const;

    /// Stores encode_edge(k) for dest, replacing whatever was there. Throws
    /// TableError when dest is the owner or out of range, and MaskError when
    /// k does not fit the entry width.
    void set_entry(NodeId dest, EdgeOrdinal k);

    /// Writes raw bits without validation. Test hook for corrupt caches.
    void inject_mask(NodeId dest, EdgeMask mask);

    void clear_entry(NodeId dest);

    /// Zeroes every mask and returns how many were nonzero.
    std::size_t clear();

    /// Clears all masks and re-lays storage out for a new degree and
    /// destination count. Traffic counters are kept.
    std::size_t reset(std::size_t node_count, std::size_t degree);

    /// Adds destination slots up to node_count, keeping existing masks.
    void grow(std::size_t node_count);

    std::size_t trained_count() const noexcept;

    /// Cached next hop toward dest, decoded against the current row of the
    /// owner in g.
    NextHop get_next_hop(const Graph& g, NodeId dest) const;

    /// Departure handling for this table. If the owner was one of the
    /// departed node's former neighbors its adjacency row changed, every
    /// ordinal is suspect and the whole table is cleared and re-laid out;
    /// otherwise nothing is cleared now and stale entries are caught at
    /// forwarding time. Returns the number of entries cleared.
    std::size_t invalidate_for_departure(const Graph& g,
                                         NodeId dead,
                                         std::span<const NodeId> former_neighbors);

    std::uint64_t traffic(NodeId dest) const;
    void count_traffic(NodeId dest);

  private:
    std::size_t slot(NodeId dest) const;

    NodeId m_owner = 0;
    std::size_t m_entryBytes = 1;
    std::vector<std::uint8_t> m_storage; // little-endian masks, index dest-1
    std::vector<std::uint64_t> m_traffic;
};

/// n * mask_bytes_for_degree(degree(owner)): the table footprint implied by
/// the current graph.
std::size_t table_byte_size(const RouteTable& table, const Graph& g);

} // namespace bitroute
