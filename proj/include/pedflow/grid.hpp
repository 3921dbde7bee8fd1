#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace pedflow {

// Cell occupancy. Top agents walk toward the last row, Bottom agents toward
// row zero.
enum class CellState : uint8_t {
    Empty = 0,
    Top = 1,
    Bottom = 2,
};

// Goal-relative neighbor directions, F pointing at the agent's target row.
enum class Dir : int {
    F = 0,
    FL = 1,
    FR = 2,
    L = 3,
    R = 4,
    B = 5,
    BL = 6,
    BR = 7,
};

inline constexpr int kNumDirs = 8;

// Offsets for a Top agent; the Bottom frame is the point reflection, so the
// same slot of opposing agents on one cell refers to mirrored neighbors.
inline constexpr std::array<std::array<int, 2>, kNumDirs> kGoalOffsets{{
    {{+1, 0}},   // F
    {{+1, -1}},  // FL
    {{+1, +1}},  // FR
    {{0, -1}},   // L
    {{0, +1}},   // R
    {{-1, 0}},   // B
    {{-1, -1}},  // BL
    {{-1, +1}},  // BR
}};

inline std::pair<int, int> dir_offset(CellState group, Dir d) {
    const auto& o = kGoalOffsets[size_t(d)];
    const int sign = (group == CellState::Bottom) ? -1 : 1;
    return {sign * o[0], sign * o[1]};
}

// Row-major 2D array; (row, col) indexing with row 0 at the top edge.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int height, int width, T fill = T{})
        : height_(height), width_(width), cells_(size_t(height) * size_t(width), fill) {}

    int height() const { return height_; }
    int width() const { return width_; }
    size_t size() const { return cells_.size(); }

    bool in_bounds(int r, int c) const { return r >= 0 && r < height_ && c >= 0 && c < width_; }

    T& at(int r, int c) { return cells_[size_t(r) * width_ + c]; }
    const T& at(int r, int c) const { return cells_[size_t(r) * width_ + c]; }

    T& operator[](size_t i) { return cells_[i]; }
    const T& operator[](size_t i) const { return cells_[i]; }

    std::vector<T>& data() { return cells_; }
    const std::vector<T>& data() const { return cells_; }

    bool operator==(const Matrix&) const = default;

  private:
    int height_ = 0;
    int width_ = 0;
    std::vector<T> cells_;
};

// One row of the agent table. (row, col) always mirrors the index grid; the
// future cell is whatever the intention phase decided for this step.
struct AgentRecord {
    uint32_t index = 0;  // 1-based id, as stored in the index grid
    CellState group = CellState::Empty;
    int32_t row = 0;
    int32_t col = 0;
    int32_t future_row = 0;
    int32_t future_col = 0;
    double tour_length = 0.0;  // cumulative Euclidean path length (ACO)
    bool crossed = false;      // sticky: set once the opposite band is reached
};

// Distances from each neighbor slot to the target row, precomputed once. The
// nominal forward gap d0 fixes the whole table:
//   d = sqrt((d0 - f)^2 + l^2), f = +1 forward / 0 lateral / -1 backward,
//   l = 1 for any sideways offset. Forward is always the strict minimum.
struct DistanceTable {
    std::array<double, kNumDirs> d{};
    double d0 = 2.0;

    double min() const { return d[size_t(Dir::F)]; }
};

// Throws ConfigError unless d0 > 1 (needed for the strict forward ordering).
DistanceTable distance_table(double d0);

struct NeighborSlot {
    int32_t row = 0;
    int32_t col = 0;
    bool in_bounds = false;
    CellState occupant = CellState::Empty;  // meaningful only when in_bounds
};

// Step-start snapshot of the 8 cells around an agent, in goal-relative order.
// Out-of-bounds slots count as occupied: the arena has solid walls.
struct Neighborhood {
    std::array<NeighborSlot, kNumDirs> slot{};

    bool open(Dir d) const {
        const NeighborSlot& s = slot[size_t(d)];
        return s.in_bounds && s.occupant == CellState::Empty;
    }
};

Neighborhood neighborhood(const Matrix<CellState>& occupancy, const AgentRecord& agent);

}  // namespace pedflow
