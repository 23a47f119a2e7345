#include "hca/io.hpp"
#include "hca/kari.hpp"

namespace hca {
namespace io {

std::shared_ptr<const DirectedTileSet> make_tileset(const std::string& name) {
    if (name == "kari") return KariTileSet::instance(Rule6Variant::corrected_e);
    if (name == "kari:rule6a") return KariTileSet::instance(Rule6Variant::as_printed);
    if (name == "simple1") return simple_tileset(1);
    if (name == "simple2") return simple_tileset(2);
    throw ParseError("unknown tileset '" + name + "'");
}

}  // namespace io
}  // namespace hca
