#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gauss/code.h"
#include "gauss/criteria.h"
#include "gauss/interlace.h"

namespace gauss {

enum class RenderFormat { Dot, Tikz };

std::optional<RenderFormat> parse_render_format(std::string_view name);

// All renderers number vertices and chords from 1. Graph vertices sit on a
// circle in index order; DOT output carries pinned positions for neato.

/// Circle with 2n marked points and one straight chord per symbol.
std::string render_diagram(const ChordDiagram& d, RenderFormat format);
std::string render_graph(const InterlacementGraph& g, RenderFormat format);
/// Odd-weight edges drawn bold.
std::string render_weighted(const WeightedInterlacementGraph& w, RenderFormat format);
/// Subdivision vertices are named u1, u2, ... and drawn as small points.
std::string render_modified(const ModifiedGraph& m, RenderFormat format);
/// The diagram of the Dehn-transformed word, chords labeled with the input's symbols.
std::string render_dehn(std::span<const Symbol> word, RenderFormat format);
inline std::string render_dehn(const GaussCode& code, RenderFormat format) { return render_dehn(code.symbols(), format); }

}  // namespace gauss
