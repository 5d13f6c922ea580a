"""
lif_neuron.v
============

Verilog for one leaky integrate-and-fire neuron, matching
``snnchip.core.neuron.neuron_step`` cycle for cycle.
"""

FILENAME = "lif_neuron.v"

LIF_NEURON_V = """\
// lif_neuron.v
// Leaky integrate-and-fire neuron, 8-bit unsigned saturating datapath.
// All state is registered; spike reflects the cycle just completed.

module lif_neuron (
    input  wire       clk,
    input  wire       rst,
    input  wire [7:0] current,
    input  wire [7:0] threshold,
    input  wire [7:0] leak,
    input  wire [7:0] refractory_period,
    output reg  [7:0] membrane,
    output reg  [7:0] refractory_count,
    output reg        spike
);

    // 9-bit sum cannot wrap: 255 + 255 = 510
    wire [8:0] sum        = {1'b0, membrane} + {1'b0, current};
    wire [8:0] leaked     = (sum > {1'b0, leak}) ? (sum - {1'b0, leak}) : 9'd0;
    wire [7:0] integrated = leaked[8] ? 8'hFF : leaked[7:0];

    always @(posedge clk) begin
        if (rst) begin
            membrane         <= 8'd0;
            refractory_count <= 8'd0;
            spike            <= 1'b0;
        end else if (refractory_count != 8'd0) begin
            membrane         <= 8'd0;
            refractory_count <= refractory_count - 8'd1;
            spike            <= 1'b0;
        end else if (integrated > threshold) begin
            membrane         <= 8'd0;
            refractory_count <= refractory_period;
            spike            <= 1'b1;
        end else begin
            membrane         <= integrated;
            refractory_count <= 8'd0;
            spike            <= 1'b0;
        end
    end

endmodule
"""


def render() -> str:
    return LIF_NEURON_V
