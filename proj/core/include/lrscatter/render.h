#ifndef LRSCATTER_RENDER_H_
#define LRSCATTER_RENDER_H_

#include <string>

#include "lrscatter/permutations.h"
#include "lrscatter/web.h"

namespace lrscatter {

enum class RenderFormat { kSvg, kAscii };

// Wiring diagram of a reduced word, top crossing first. With 0 < s <= n the
// lines are drawn with the orientation of G(a, s).
std::string Render(const ReducedWord& word, RenderFormat format, int s = 0);
std::string Render(const WebDiagram& web, RenderFormat format);
std::string Render(const BzPattern& pattern, RenderFormat format);

}  // namespace lrscatter

#endif  // LRSCATTER_RENDER_H_
